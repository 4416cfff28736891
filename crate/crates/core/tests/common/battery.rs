//! Formulas checked against the brute-force evaluator.
//!
//! Free variables range over `[0, BOUND)` and quantifiers over
//! `[0, QUANTIFIER_BOUND]`. Each entry says why that range is enough: every
//! existential witness, and every universal value that can make the body
//! false, is at most `2·BOUND - 2`.

pub const BOUND: u64 = 64;
pub const QUANTIFIER_BOUND: u64 = 2 * BOUND;

pub struct Case {
    pub text: &'static str,
    pub why: &'static str,
}

const fn case(text: &'static str, why: &'static str) -> Case {
    Case { text, why }
}

pub const BATTERY: &[Case] = &[
    case("x = y", "no quantifiers"),
    case("x + y = z", "no quantifiers"),
    case("V(x) = y", "no quantifiers"),
    case("V(x + y) = z", "no quantifiers"),
    case("!(x = y) & V(x) = V(y)", "no quantifiers"),
    case("V(x) = x & !(x = 0)", "no quantifiers"),
    case("x + 3 = y", "no quantifiers"),
    case("V(x) = 2 * y", "no quantifiers"),
    case("x + x = y + 1 | V(y + 1) = x", "no quantifiers"),
    case("V(x) = V(y) & V(y) = V(z)", "no quantifiers"),
    case("E y (x = y + y)", "y ≤ x"),
    case("E z (x + z = y)", "z ≤ y"),
    case("x < y", "the desugared witness is below y"),
    case("x <= y <-> E z (x + z = y)", "all witnesses are at most y"),
    case("E u (V(u) = u & x + u = y)", "u ≤ y"),
    case("E y (y + y + y = x) | V(x) = 1", "y ≤ x"),
    case("E w (x + w = z & y + w = z)", "w ≤ z"),
    case("E z (V(z) = z & z <= x & x < z + z)", "z ≤ x"),
    case("A z (z + z = x -> V(x) = x)", "the body can only fail for z ≤ x"),
    case("A u (u + x = y -> V(u) = u)", "the body can only fail for u ≤ y"),
    case("E u E v (x = u + v & V(u) = u & V(v) = v)", "u, v ≤ x"),
    case("A y (y < x -> E z (y + z = x))", "y < x and then z ≤ x"),
    case(
        "E z (x = z + z & A u (u + u = z -> E v (v + v + v = u)))",
        "z ≤ x, u ≤ z, v ≤ u",
    ),
    case("(E y (V(y) = y & !(y = 1) & V(x) = y)) -> E z (z + z = x)", "y ≤ x, z ≤ x"),
];

/// Text, quantifier bound for the oracle, and truth per base.
pub type Sentence = (&'static str, u64, &'static [(u32, bool)]);

/// Sentences with their truth value in each listed base, decided by hand.
pub const SENTENCES: &[Sentence] = &[
    ("A x (x < 10 -> E y (x = y + y | x = y + y + 1))", 10, &[(2, true), (3, true)]),
    ("E x (V(x) = x & 5 < x & x < 9)", 9, &[(2, true), (3, false), (4, false), (7, true)]),
    ("E x (V(x) = x & 9 < x & x < 16)", 16, &[(2, false), (3, false), (4, false), (10, true)]),
    ("A x (x < 20 -> V(x) + x = x + V(x))", 20, &[(2, true), (5, true)]),
    ("E x (x + x = 7)", 7, &[(2, false), (3, false)]),
    ("E x (V(x) = 9 & x < 20 & !(x = 9))", 20, &[(3, true), (2, false), (9, true)]),
    ("A x (x < 30 -> (V(x) = 1 <-> E y (x = y + y + 1)))", 30, &[(2, true), (3, false)]),
];
