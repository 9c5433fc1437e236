/// Every property id with the law it checks.
pub const MANIFEST: &[(&str, &str)] = &[
    ("ax01", "axiom 1: x + y = y + x"),
    ("ax02", "axiom 2: x + (y + z) = (x + y) + z"),
    ("ax03", "axiom 3: x + 0 = x"),
    ("ax04", "axiom 4: a(bx) = (ab)x"),
    ("ax05", "axiom 5: a(x + y) = ax + ay"),
    ("ax06", "axiom 6: 1x = x"),
    ("ax07", "axiom 7: 0x = 0"),
    ("ax08", "axiom 8: (a + b)x <= ax + bx"),
    ("ax09", "axiom 9: x <= y, z <= v => x + z <= y + v"),
    ("ax10", "axiom 10: x <= y => ax <= ay"),
    ("ax11", "axiom 11: x(yz) = (xy)z"),
    ("ax12", "axiom 12: a(xy) = (ax)y = x(ay)"),
    ("ax13", "axiom 13: 0 * 0 = 0"),
    ("ax14", "axiom 14: x(y + z) <= xy + xz, (x + y)z <= xz + yz"),
    ("ax15", "axiom 15: x <= y, z <= v => xz <= yv"),
    ("canon", "sums, products and multiples are in canonical form"),
    ("chain-strict", "x < x1 < x2 < ..., x_(i+1) = x_i + x_i - x_i"),
    ("hom-abs", "p = c|.|, c >= 1: x -> [-p(-x), p(x)] is a quasi-homomorphism"),
    ("hom-bounded", "||f(x)|| <= k ||x|| for every shipped map"),
    ("hom-chargeo", "f_N(xy) <= f_(N+1)(x) f_(N+1)(y); f_N additive and homogeneous"),
    ("hom-double-opr-witness", "doubling: {3} <= [-4,4] = f([-2,2]) but {3} not <= [-2,2]"),
    ("hom-half-qh3-witness", "halving: f([-2,2][-4,4]) = [-4,4] not <= [-1,1][-2,2]"),
    ("hom-identity", "identity is an opr quasi-homomorphism"),
    ("hom-image-qsp", "QSp(f(x)) <= QSp(x) for surjective f"),
    ("hom-interval2disk", "[a,b] -> disk((a+b)/2, (b-a)/2) is an opr quasi-homomorphism"),
    ("hom-inverse", "g = f^-1: g(y1) + g(y2) <= g(y1 + y2), g(y1)g(y2) <= g(y1 y2)"),
    ("hom-kernel", "ker f = {0}: f(x) regular => x regular"),
    ("hom-no-char", "no quasi-homomorphism from closed bounded sets onto R: f({0}) = f(B) = f({1})"),
    ("hom-opnorm", "||x -> {x_1, x_2}|| = sup_(||x|| = 1) ||f(x)|| = 1"),
    ("hom-opr", "f(x) <= f(y) => x <= y"),
    ("hom-opr-injective", "opr f: f(x) = f(y) => x = y"),
    ("hom-unit-complement", "f(1 - x) = 1 - f(x) for regular f(x)"),
    ("lem-real-order", "every element invertible => order is equality"),
    ("lem-regular-min", "x regular, y <= x => y = x"),
    ("lem-regular-sum", "x + y regular => x, y regular"),
    ("lem-scale-fixed", "x = ax, a not in {0, 1, -1} => x = 0"),
    ("lem-zero-min", "x <= 0 => x = 0"),
    ("met-lipschitz", "| ||x|| - ||y|| | <= h(x, y)"),
    ("met-ident", "h(x, y) = 0 <=> x = y"),
    ("met-norm-diff", "h(x, y) <= ||x - y||"),
    ("met-oracle", "h = inf{r : x <= y + a1, y <= x + a2, ||ai|| <= r}, within one grid step"),
    ("met-product", "h(xy, xz) <= ||x|| h(y, z)"),
    ("met-regular", "y regular => h(x, y) = ||x - y||"),
    ("met-scale", "h(ax, ay) = |a| h(x, y)"),
    ("met-symmetry", "h(x, y) = h(y, x)"),
    ("met-translate", "h(x + z, y + z) <= h(x, y)"),
    ("met-triangle", "h(x, z) <= h(x, y) + h(y, z)"),
    ("nrm0", "||0|| = 0"),
    ("nrm1", "norm axiom 1: x != 0 => ||x|| > 0"),
    ("nrm2", "norm axiom 2: ||x + y|| <= ||x|| + ||y||"),
    ("nrm3", "norm axiom 3: ||ax|| = |a| ||x||"),
    ("nrm4", "norm axiom 4: ||xy|| <= ||x|| ||y||"),
    ("nrm5", "norm axiom 5: x <= y => ||x|| <= ||y||"),
    ("nrm6", "norm axiom 6: excess(x, y) = 0 <=> x <= y"),
    ("ord", "<= is reflexive, antisymmetric and transitive"),
    ("sp-chain", "l in QSp(x) => l in QSp(x_i) for every chain link"),
    ("sp-commute", "x unit: QSp(xy) <= {0} u QSp(yx)"),
    ("sp-identity", "1x = x1 = x, 1 regular"),
    ("sp-inverse-bound", "x, y units, h(x, y) < 1/(2||x^-1||) => ||y^-1|| <= 2||x^-1||"),
    ("sp-monotone", "x <= y => QSp(x) <= QSp(y)"),
    ("sp-not-open", "{a} unit, r > 0: a + (r/2)B within r of {a} and not a unit"),
    ("sp-radius", "l in QSp(x) => |l| <= ||x||"),
    ("sp-unit-dist", "x unit: x(y + z) = xy + xz"),
    ("sp-unit-regular", "x unit => x regular"),
];

pub fn anchor(id: &str) -> Option<&'static str> {
    MANIFEST.iter().find(|(i, _)| *i == id).map(|(_, a)| *a)
}
