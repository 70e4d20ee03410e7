//! Printed reference data: the table of one solution per degree and the
//! worked examples, each paired with the computation that should reproduce it.

use powersum_core::families::{
    deg2_family, deg3_shift_family, deg3_symmetric_family, deg4_family, deg5_66_family, deg6_family,
    deg7_family, deg8_family, deg9_family, DEG3_SHIFT_BASE,
};
use powersum_core::{canonicalize, PowerSumPair, Rational, Result};

/// One row of the per-degree table as printed (after reading the degree-4
/// run-together "9501292" as 950, 1292).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub n: u32,
    pub lhs: [i64; 6],
    pub rhs: [i64; 6],
    pub degrees: &'static [u32],
}

impl TableRow {
    pub fn pair(&self) -> PowerSumPair {
        PowerSumPair::from_ints(&self.lhs, &self.rhs, self.degrees, &format!("table-a n={}", self.n))
    }
}

pub const TABLE_A: [TableRow; 8] = [
    TableRow { n: 2, lhs: [1, 7, 17, 30, 31, 36], rhs: [3, 4, 19, 27, 34, 35], degrees: &[2] },
    TableRow { n: 3, lhs: [11, 22, 4, 3, 21, 5], rhs: [20, 7, 6, 23, 9, 1], degrees: &[3] },
    TableRow { n: 4, lhs: [16, 480, 496, 532, 798, 1330], rhs: [224, 342, 336, 560, 950, 1292], degrees: &[4] },
    TableRow { n: 5, lhs: [87, 233, 264, 396, 496, 540], rhs: [90, 206, 309, 366, 522, 523], degrees: &[5] },
    TableRow { n: 6, lhs: [61, 3, 109, 67, 7, 79], rhs: [21, 17, 53, 59, 89, 107], degrees: &[6] },
    TableRow { n: 7, lhs: [129, 199, 285, 71, 11, 366], rhs: [218, 110, 367, 277, 38, 51], degrees: &[1, 3, 5, 7] },
    TableRow { n: 8, lhs: [3, 6, 8, 10, 15, 23], rhs: [5, 9, 12, 9, 20, 22], degrees: &[8] },
    TableRow { n: 9, lhs: [1, 13, 14, 13, 18, 23], rhs: [5, 9, 10, 15, 21, 22], degrees: &[1, 3, 9] },
];

/// A worked example: the printed pair and, unless the text only asks for a
/// numerical check, the family call that should reproduce it.
#[derive(Debug, Clone, PartialEq)]
pub struct Example {
    pub name: String,
    pub printed: PowerSumPair,
    pub computed: Option<Result<PowerSumPair>>,
}

impl Example {
    /// Canonical computed form restricted to the printed degrees.
    pub fn computed_canonical(&self) -> Option<Result<PowerSumPair>> {
        self.computed.as_ref().map(|c| {
            c.clone().and_then(|p| p.with_degrees(self.printed.degrees.iter().copied())).map(|p| canonicalize(&p))
        })
    }

    pub fn printed_canonical(&self) -> PowerSumPair {
        canonicalize(&self.printed)
    }
}

fn q(s: &str) -> Rational {
    s.parse().expect("fixture literal")
}

fn ex(name: impl Into<String>, l: &[i64], r: &[i64], degrees: &[u32], computed: Option<Result<PowerSumPair>>) -> Example {
    let name = name.into();
    Example { printed: PowerSumPair::from_ints(l, r, degrees, &name), name, computed }
}

fn deg9_vectors(a: &str, b: &str, t: &str) -> Result<PowerSumPair> {
    deg9_family(&q(a), &q(b), &q(t), None).map(|s| s.vectors)
}

/// Family parameters with the printed left and right sides.
pub type Row<P> = (P, [i64; 6], [i64; 6]);

/// `(x, a, b)` rows of the degree-8 family with their printed pairs.
pub const DEG8_ROWS: [Row<(i64, i64, i64)>; 5] = [
    ((1, 47, 82), [565, 459, 457, 552, 23, 116], [493, 575, 529, 436, 93, 72]),
    ((-6, 21, 113), [211, 155, 59, 44, 165, 54], [31, 209, 121, 10, 111, 180]),
    ((6, 15, 139), [106, 203, 295, 91, 78, 216], [232, 13, 169, 125, 294, 126]),
    ((-14, 5, 9), [19, 27, 35, 4, 3, 34], [17, 7, 1, 30, 31, 36]),
    ((-14, 3, -37), [190, 111, 127, 13, 182, 84], [148, 195, 169, 71, 98, 42]),
];

/// `(p, q, a, b)` rows of the degree-7 family with their printed pairs.
pub const DEG7_ROWS: [Row<(i64, i64, i64, i64)>; 5] = [
    ((3, 2, 1, 13), [-13, 33, -59, 23, -5, -51], [39, -19, -55, 19, -57, 1]),
    ((4, 1, 82, 89), [129, 199, 285, 71, 11, 366], [218, 110, 367, 277, 38, 51]),
    ((4, 1, 89, 82), [255, 457, 573, 83, 95, 753], [419, 293, 751, 589, 41, 123]),
    ((3, 2, 466, 607), [329, -39, -4347, 1159, -1923, -1555], [2757, -2467, -2483, -705, -4351, 873]),
    ((3, 2, 607, 466), [372, -517, -2248, 364, -1314, -425], [1304, -1449, -1034, -850, -2246, 507]),
];

/// Every in-text example, in reading order.
pub fn worked_examples() -> Vec<Example> {
    let r = Rational::from;
    let mut out = vec![
        ex(
            "deg2_family k=2",
            &[85, 158, 243, 252, 49, 119],
            &[21, 28, 133, 189, 238, 245],
            &[2],
            Some(Ok(deg2_family(&r(2)))),
        ),
        ex(
            "deg3_shift_family base x=-1/5",
            &[-4, -3, -1, 3, 4, 7],
            &[-2, 0, 1, 2, 5, 6],
            &[3],
            Some(deg3_shift_family(&DEG3_SHIFT_BASE.0, &DEG3_SHIFT_BASE.1).map(|s| s.pair)),
        ),
        ex(
            "deg3_symmetric_family (2,5,10,6,21,22) x=1",
            &[11, 22, 4, 3, 21, 5],
            &[20, 7, 6, 23, 9, 1],
            &[3],
            Some(deg3_symmetric_family([2, 5, 10, 6, 21, 22], &r(1))),
        ),
        ex(
            "deg4_family k=2",
            &[4655, 2793, 1944, 1862, 1264, 680],
            &[4522, 3325, 1960, 1197, 1176, 784],
            &[4],
            Some(Ok(deg4_family(&r(2)))),
        ),
        ex(
            "deg5_66_family m=2",
            &[1113, 377, 889, 303, 567, 119],
            &[269, 417, 989, 203, 427, 1063],
            &[5],
            Some(Ok(deg5_66_family(&r(2)))),
        ),
        ex(
            "deg6_family a1=1 b2=1 k=1",
            &[3, 109, 67, 7, 61, 79],
            &[53, 59, 17, 21, 89, 107],
            &[6],
            Some(deg6_family(1, 1, 1)),
        ),
        ex(
            "deg6_family a1=1 b2=1 k=3",
            &[59, 245, 131, 167, 13, 159],
            &[93, 211, 97, 91, 89, 235],
            &[6],
            Some(deg6_family(1, 1, 3)),
        ),
        ex("deg6 example c", &[27, 85, 43, 73, 11, 49], &[29, 83, 41, 45, 17, 77], &[6], None),
    ];
    for ((p, qq, a, b), l, rr) in DEG7_ROWS {
        out.push(ex(format!("deg7_family p={p} q={qq} a={a} b={b}"), &l, &rr, &[1, 3, 5, 7], Some(deg7_family(p, qq, a, b))));
    }
    for ((x, a, b), l, rr) in DEG8_ROWS {
        out.push(ex(format!("deg8_family x={x} a={a} b={b}"), &l, &rr, &[8], Some(deg8_family(&r(x), &r(a), &r(b)))));
    }
    out.extend([
        ex(
            "deg9_family a=3 b=4 t=27/41",
            &[1025, 291, -996, -1081, 965, -44],
            &[865, 131, -1156, -921, 1125, 116],
            &[1, 2, 3, 9],
            Some(deg9_vectors("3", "4", "27/41")),
        ),
        ex(
            "deg9_family a=1 b=3 t=6/5",
            &[18, 13, 14, 23, 13, 1],
            &[5, 10, 15, 21, 22, 9],
            &[1, 3, 9],
            Some(deg9_vectors("1", "3", "6/5")),
        ),
        ex(
            "deg9_family a=4 b=9 t=13/3",
            &[453, 122, 331, 431, 150, 281],
            &[429, 98, 307, 455, 174, 305],
            &[1, 3, 9],
            Some(deg9_vectors("4", "9", "13/3")),
        ),
    ]);
    out.push(deg9_large_example());
    out
}

/// The eleven-digit vectors at the doubled parameter.
pub fn deg9_large_example() -> Example {
    Example {
        name: "deg9_family a=3 b=4 t=3181201/12876603".into(),
        printed: PowerSumPair::new(
            [
                "15677071397",
                "40208111671",
                "-63297775068",
                "-26458358421",
                "63560861593",
                "-33396207172",
            ]
            .map(q)
            .to_vec(),
            [
                "19383367397",
                "43914407671",
                "-59591479068",
                "-30164654421",
                "59854565593",
                "-37102503172",
            ]
            .map(q)
            .to_vec(),
            [1, 2, 3, 9],
            "deg9 printed 11-digit vectors",
        )
        .expect("valid degrees"),
        computed: Some(deg9_vectors("3", "4", "3181201/12876603")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use powersum_core::verify_pair;

    #[test]
    fn table_rows_verify_at_printed_degrees() {
        for row in TABLE_A {
            assert!(verify_pair(&row.pair()).pass, "n = {}", row.n);
        }
    }

    #[test]
    fn every_example_reproduces() {
        for e in worked_examples() {
            assert!(verify_pair(&e.printed).pass, "{}", e.name);
            if let Some(c) = e.computed_canonical() {
                assert_eq!(c.unwrap(), e.printed_canonical(), "{}", e.name);
            }
        }
    }
}
