#![allow(dead_code)]

use covseries::{BinomFactor, FactoredRational, ZTPoly};

fn f(a: u32, b: u32) -> BinomFactor {
    BinomFactor::simple(a, b)
}

pub fn printed_p1() -> FactoredRational {
    FactoredRational::new(ZTPoly::one(), [f(1, 1)])
}

pub fn printed_p2() -> FactoredRational {
    FactoredRational::new(ZTPoly::one(), [f(1, 2), f(2, 0)])
}

pub fn printed_p3() -> FactoredRational {
    let num = ZTPoly::from_terms([((2, 2), 1), ((1, 1), -1), ((0, 0), 1)]);
    FactoredRational::new(num, [f(1, 1), f(1, 3), f(4, 0)])
}

pub fn printed_p4() -> FactoredRational {
    let num = ZTPoly::from_terms([((2, 4), 1), ((1, 2), -1), ((0, 0), 1)]);
    FactoredRational::new(num, [f(1, 2), f(1, 4), f(2, 0), f(3, 0)])
}

/// The degree-5 numerator, term by term in the order it is printed.
pub const P5_NUMERATOR: &[((u32, u32), i64)] = &[
    ((0, 0), 1),
    ((7, 3), 1),
    ((6, 4), -1),
    ((2, 2), 1),
    ((7, 1), 2),
    ((5, 5), -1),
    ((8, 2), -1),
    ((8, 6), -2),
    ((8, 4), -1),
    ((5, 3), 1),
    ((5, 1), 1),
    ((9, 7), 1),
    ((10, 6), -1),
    ((10, 2), 1),
    ((10, 4), -1),
    ((11, 3), -1),
    ((9, 3), 1),
    ((1, 3), -1),
    ((6, 0), -1),
    ((4, 4), 1),
    ((1, 1), -1),
    ((2, 6), 1),
    ((2, 4), 1),
    ((12, 0), 1),
    ((14, 6), 1),
    ((13, 1), -1),
    ((13, 5), -1),
    ((13, 3), -1),
    ((15, 7), -1),
    ((14, 4), 1),
    ((3, 7), -1),
    ((7, 5), 1),
];

pub fn printed_p5() -> FactoredRational {
    let num = ZTPoly::from_terms(P5_NUMERATOR.iter().copied());
    FactoredRational::new(num, [f(1, 1), f(1, 3), f(1, 5), f(8, 0), f(6, 0), f(4, 0)])
}

pub fn printed(d: u32) -> FactoredRational {
    match d {
        1 => printed_p1(),
        2 => printed_p2(),
        3 => printed_p3(),
        4 => printed_p4(),
        5 => printed_p5(),
        _ => panic!("no printed series for d = {d}"),
    }
}
