//! Published data that the checks compare against.

/// The basis `p_1..p_4` of the Cartan subspace.
pub const CARTAN_BASIS: [&str; 4] = [
    "-(3,5)x1+(1,2,4,5)x2-(2,4)x3-(1,3)x4",
    "-(2,5)x1+(1,3,4,5)x2+(3,4)x3+(1,2)x4",
    "(1,2,3,4)x1+()x2+(1,2,3,5)x3-(4,5)x4",
    "(1,4)x1+(2,3)x2-(1,5)x3+(2,3,4,5)x4",
];

/// Generating reflections of the little Weyl group in the basis `p_1..p_4`.
pub const REFLECTIONS: [[[&str; 4]; 4]; 5] = [
    [["-1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
    [["0", "-1", "0", "0"], ["-1", "0", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
    [["0", "-i", "0", "0"], ["i", "0", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
    [
        ["1/2", "-1/2", "-1/2", "-1/2"],
        ["-1/2", "1/2", "-1/2", "-1/2"],
        ["-1/2", "-1/2", "1/2", "-1/2"],
        ["-1/2", "-1/2", "-1/2", "1/2"],
    ],
    [
        ["0", "0", "-1/2-1/2*i", "-1/2+1/2*i"],
        ["0", "1", "0", "0"],
        ["-1/2+1/2*i", "0", "1/2", "1/2*i"],
        ["-1/2-1/2*i", "0", "-1/2*i", "1/2"],
    ],
];

/// One row of the table of point stabilizers in the Cartan subspace.
pub struct StratumRow {
    pub index: usize,
    /// Words in `s1..s5` generating `M_i`.
    pub generators: &'static [&'static str],
    pub size: usize,
    /// Basis of `c_{M_i}` in coordinates on `p_1..p_4`.
    pub basis: &'static [[i64; 4]],
    /// Identity component of the stabilizer in `G_0`.
    pub centralizer: &'static str,
    /// Component group, not verified here.
    pub component_group: &'static str,
    pub gamma: usize,
}

pub const TABLE1: [StratumRow; 9] = [
    StratumRow {
        index: 1,
        generators: &[],
        size: 1,
        basis: &[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        centralizer: "1",
        component_group: "C2^4",
        gamma: 46080,
    },
    StratumRow {
        index: 2,
        generators: &["s1"],
        size: 2,
        basis: &[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        centralizer: "T1",
        component_group: "C2^3",
        gamma: 384,
    },
    StratumRow {
        index: 3,
        generators: &["s1", "s4s2s3s5s4s5s3s2s4"],
        size: 4,
        basis: &[[0, 1, 0, 0], [0, 0, 1, 0]],
        centralizer: "T2",
        component_group: "C2^2",
        gamma: 32,
    },
    StratumRow {
        index: 4,
        generators: &["s1", "s4"],
        size: 6,
        basis: &[[0, 1, -1, 0], [0, 0, 1, -1]],
        centralizer: "A1",
        component_group: "C2^2",
        gamma: 24,
    },
    StratumRow {
        index: 5,
        generators: &["s4s2s4", "s4s3s5s4s5s3s4", "s4s2s1s5s4s5s1s2s4"],
        size: 16,
        basis: &[[1, 0, 0, 0], [0, 1, 0, 0]],
        centralizer: "A1+T3",
        component_group: "C2^2",
        gamma: 96,
    },
    StratumRow {
        index: 6,
        generators: &["s1s2s1", "s1s2s4s3s5s3s4s2s1", "s4s2s3s5s4s5s3s2s4"],
        size: 12,
        basis: &[[1, 1, 1, 0]],
        centralizer: "A1+T1",
        component_group: "C2",
        gamma: 4,
    },
    StratumRow {
        index: 7,
        generators: &["s1", "s3s5s4s5s3", "s2s4s2"],
        size: 24,
        basis: &[[0, 1, 1, 0]],
        centralizer: "2A1",
        component_group: "C2",
        gamma: 4,
    },
    StratumRow {
        index: 8,
        generators: &["s2s1s2", "s2s5s2", "s3s5s3", "s4s5s4"],
        size: 192,
        basis: &[[1, 0, 0, 0]],
        centralizer: "2A1+A2+T1",
        component_group: "C2",
        gamma: 4,
    },
    StratumRow {
        index: 9,
        generators: &["s1", "s2", "s3", "s4", "s5"],
        size: 46080,
        basis: &[],
        centralizer: "D5+A3",
        component_group: "1",
        gamma: 1,
    },
];

/// Generators of `Gamma_i = N(M_i)/M_i` acting on the basis of `c_{M_i}`,
/// for `i = 2..8` (`Gamma_1` is the whole group, `Gamma_9` is trivial).
pub const GAMMA_GENERATORS: [&[&[&[&str]]]; 7] = [
    &[
        &[&["1", "0", "0"], &["0", "1", "0"], &["0", "0", "-1"]],
        &[&["0", "1/2+1/2*i", "1/2-1/2*i"], &["1/2+1/2*i", "1/2", "1/2*i"], &["1/2-1/2*i", "1/2*i", "1/2"]],
    ],
    &[&[&["1", "0"], &["0", "i"]], &[&["0", "1"], &["1", "0"]]],
    &[&[&["1", "0"], &["1", "-1"]], &[&["-1/2-1/2*i", "1"], &["1/2", "1/2-1/2*i"]]],
    &[&[&["1", "0"], &["0", "i"]], &[&["1/2+1/2*i", "1/2+1/2*i"], &["1/2+1/2*i", "-1/2-1/2*i"]]],
    &[&[&["i"]]],
    &[&[&["i"]]],
    &[&[&["i"]]],
];

/// Involutions `s, t, u, v, w` and their roots.
pub const PRESENTATION: [(&str, &str, [&str; 4]); 5] = [
    ("s", "s1s5s3s4s3s5s1", ["1", "i", "1+i", "0"]),
    ("t", "s4", ["1", "1", "1", "1"]),
    ("u", "s2s1s5s1s2", ["0", "1+i", "1", "i"]),
    ("v", "s1", ["1", "0", "0", "0"]),
    ("w", "s4s2s3s5s4s5s3s2s4", ["0", "0", "0", "1"]),
];

/// Relations among the presentation involutions, as pairs of equal words;
/// the last two together say `stu = tus = ust`.
pub const PRESENTATION_RELATIONS: [(&str, &str); 8] = [
    ("sw", "ws"),
    ("uv", "vu"),
    ("svs", "vsv"),
    ("vtv", "tvt"),
    ("wtw", "twt"),
    ("wuw", "uwu"),
    ("stu", "tus"),
    ("tus", "ust"),
];

/// Polynomials in the coordinates of the Table 1 basis of `c_{M_i}`
/// whose simultaneous nonvanishing cuts out `c_{M_i}^o`, for `i = 1..5`.
pub const STRATUM_POLYNOMIALS: [&[&str]; 5] = [
    &[
        "x1x2x3x4",
        "x2^4 - 2x2^2x3x4 + (1/4)x3^4 + (1/2)x3^2x4^2 + (1/4)x4^4",
        "x1^4-x2^4",
        "x3^4-x4^4",
        "x2^4 + 2x2^2x3x4 + (1/4)x3^4 + (1/2)x3^2x4^2 +(1/4)x4^4",
        "x1^2 - 2x1x2 + x2^2 - x3^2 - 2x3x4 - x4^2",
        "x1^2 - 2x1x2 + x2^2 - x3^2 + 2x3x4 - x4^2",
        "x1^2 + 2x1x2 + x2^2-x3^2-2x3x4-x4^2",
        "x1^2 + 2x1x2 + x2^2-x3^2 + 2x3x4 - x4^2",
        "x1^4 + 2x1^2x2^2 - 8x1x2x4^2 + x2^4 + 4x4^4",
        "x1^4 + 2x1^2x2^2 + 8x1x2x4^2 + x2^4 + 4x4^4",
        "x1^4 + 2x1^2x2^2 - 8x1x2x3^2 + x2^4 + 4x3^4",
        "x1^4 + 2x1^2x2^2 + 8x1x2x3^2 + x2^4 + 4x3^4",
        "x1^4 - 2x1^2x3x4 +(1/4)x3^4+(1/2)x3^2x4^2+(1/4)x4^4",
        "x1^4 + 2x1^2x3x4 +(1/4)x3^4+(1/2)x3^2x4^2+(1/4)x4^4",
        "x1^2 - 2x1x2 + x2^2 + x3^2 - 2x3x4 + x4^2",
        "x1^2 - 2x1x2 + x2^2 + x3^2 + 2x3x4 + x4^2",
        "x1^2 + 2x1x2 + x2^2 + x3^2 - 2x3x4 + x4^2",
        "x1^2 + 2x1x2 + x2^2 + x3^2 + 2x3x4 + x4^2",
    ],
    &[
        "x1x2x3",
        "x1^2 - 2x1x2 + x2^2 - x3^2",
        "x2^4-x3^4",
        "x1^2 + 2x1x2 + x2^2 - x3^2",
        "x1^2 + x2^2 - 2x2x3 + x3^2",
        "x1^2 + x2^2 + 2x2x3 + x3^2",
        "x1^4 + 4x3^4",
        "x1^4 + 4x2^4",
        "x1^4 - 2x1^2x2x3 + (1/4)x2^4 + (1/2)x2^2x3^2 + (1/4)x3^4",
        "x1^4 + 2x1^2x2x3 + (1/4)x2^4 + (1/2)x2^2x3^2 + (1/4)x3^4",
    ],
    &[
        "x1x2",
        "x1^4-x2^4",
        "x1^8 + (17/4)x1^4x2^4 + x2^8",
    ],
    &[
        "x1x2",
        "x1^2 - 3x1x2 + 2x2^2",
        "x1^4 + 4x2^4",
        "x1^2 - (6/5)x1x2 + (2/5)x2^2",
        "x1^2 - (2/5)x1x2 + (2/5)x2^2",
    ],
    &[
        "x1x2",
        "x1^4-x2^4",
    ],
];

/// The ten Klein quadrics in `x1..x4`.
pub const QUADRICS: [&str; 10] = [
    "x1x3+ix1x4-x2x4-ix2x3",
    "x1x3+ix2x3-x2x4-ix1x4",
    "x1^2+ix3^2-x2^2-ix4^2",
    "x1^2+ix4^2-x2^2-ix3^2",
    "x1x3-ix1x4-ix2x3+x2x4",
    "x1x3+ix1x4+ix2x3+x2x4",
    "x1^2+x2^2+2x3x4",
    "2x1x2+x3^2+x4^2",
    "x1^2+x2^2-2x3x4",
    "2x1x2-x3^2-x4^2",
];

/// `QUADRIC_ACTION[i][k] = (j, c)`: `s_{k+1}` sends `Q_{i+1}` to `c Q_j`.
pub const QUADRIC_ACTION: [[(usize, &str); 5]; 10] = [
    [(6, "-1"), (2, "i"), (5, "1"), (4, "-(1+i)/2"), (10, "(1+i)/2")],
    [(5, "-1"), (1, "-i"), (6, "-1"), (3, "(-1+i)/2"), (2, "1")],
    [(3, "1"), (4, "-1"), (3, "1"), (2, "-(1+i)"), (3, "1")],
    [(4, "1"), (3, "-1"), (4, "1"), (1, "-1+i"), (9, "-1")],
    [(2, "-1"), (6, "i"), (1, "1"), (5, "1"), (5, "1")],
    [(1, "-1"), (5, "-i"), (2, "-1"), (6, "1"), (8, "-(1+i)/2")],
    [(7, "1"), (7, "1"), (9, "-1"), (7, "1"), (7, "1")],
    [(8, "1"), (8, "1"), (8, "1"), (8, "1"), (6, "-1+i")],
    [(9, "1"), (9, "1"), (7, "-1"), (10, "-1"), (4, "-1")],
    [(10, "1"), (10, "1"), (10, "1"), (9, "-1"), (1, "1-i")],
];

/// The six Maschke quartics in `x1..x4`.
pub const QUARTICS: [&str; 6] = [
    "2x1^4+2x2^4-x3^4-x4^4+12x1x2(x3^2+x4^2)+6x3^2x4^2",
    "-x1^4-x2^4+2x3^4+2x4^4+6x1^2x2^2-12(x1^2+x2^2)x3x4",
    "2x1^4+2x2^4-x3^4-x4^4-12x1x2(x3^2+x4^2)+6x3^2x4^2",
    "-x1^4-x2^4+2x3^4+2x4^4+6x1^2x2^2+12(x1^2+x2^2)x3x4",
    "-x1^4-x2^4-x3^4-x4^4-6x1^2x2^2+6i(x1^2-x2^2)(x3^2-x4^2)-6x3^2x4^2",
    "-x1^4-x2^4-x3^4-x4^4-6x1^2x2^2-6i(x1^2-x2^2)(x3^2-x4^2)-6x3^2x4^2",
];

/// `QUARTIC_ACTION[i][k] = j`: `s_{k+1}` sends `A_{i+1}` to `A_j`.
pub const QUARTIC_ACTION: [[usize; 5]; 6] = [
    [3, 1, 1, 4, 1],
    [2, 2, 4, 2, 6],
    [1, 3, 3, 3, 3],
    [4, 4, 2, 1, 4],
    [5, 6, 5, 5, 5],
    [6, 5, 6, 6, 2],
];

/// `F24` is this fraction of the Hessian determinant of `F8`.
pub const HESSIAN_SCALE: i64 = 265531392;

/// `z = L x` with every entry of `L` carrying a factor `1/sqrt 2`; the rows
/// here are `sqrt 2 L`.
pub const Z_CHANGE_SCALED: [[&str; 4]; 4] = [
    ["1", "1", "0", "0"],
    ["0", "0", "-i", "i"],
    ["i", "-i", "0", "0"],
    ["0", "0", "-i", "-i"],
];

/// The basis of the Cartan subspace dual to `z1..z4`, as coefficient
/// vectors on `p_1..p_4` times `sqrt 2`.
pub const Z_BASIS_SCALED: [[&str; 4]; 4] = [
    ["1", "1", "0", "0"],
    ["0", "0", "i", "i"],
    ["-i", "i", "0", "0"],
    ["0", "0", "i", "-i"],
];

pub const Z_QUADRICS: [&str; 10] = [
    "z1z2+z3z4",
    "z1z2-z3z4",
    "z1z3+z2z4",
    "z1z3-z2z4",
    "z1z4+z2z3",
    "z1z4-z2z3",
    "z1^2+z2^2-z3^2-z4^2",
    "z1^2-z2^2+z3^2-z4^2",
    "z1^2-z2^2-z3^2+z4^2",
    "z1^2+z2^2+z3^2+z4^2",
];

pub const Z_QUARTICS: [&str; 6] = [
    "z1^4+z2^4+z3^4+z4^4-6(z1^2z2^2+z1^2z3^2+z1^2z4^2+z2^2z3^2+z2^2z4^2+z3^2z4^2)",
    "z1^4+z2^4+z3^4+z4^4-6(z1^2z2^2-z1^2z3^2-z1^2z4^2-z2^2z3^2-z2^2z4^2+z3^2z4^2)",
    "z1^4+z2^4+z3^4+z4^4-6(-z1^2z2^2+z1^2z3^2-z1^2z4^2-z2^2z3^2+z2^2z4^2-z3^2z4^2)",
    "z1^4+z2^4+z3^4+z4^4-6(-z1^2z2^2-z1^2z3^2+z1^2z4^2+z2^2z3^2-z2^2z4^2-z3^2z4^2)",
    "-2z1^4-2z2^4-2z3^4-2z4^4-24z1z2z3z4",
    "-2z1^4-2z2^4-2z3^4-2z4^4+24z1z2z3z4",
];

/// A row of a mixed-element table: nilpotent part, orbit dimension,
/// centralizer notation, and for Table 8 the relative characteristic.
#[derive(Clone, Copy, Debug)]
pub struct MixedRow {
    pub element: &'static str,
    pub dim: usize,
    pub centralizer: &'static str,
    pub characteristic: Option<(&'static str, &'static str)>,
    /// Printed over two lines in the source table.
    pub joined: bool,
}

/// Tables 2 to 8, indexed by the stratum `2..=8`.
pub const MIXED_TABLES: [&[MixedRow]; 7] = [
    &[
        MixedRow { element: "(3,5)x1+(1,3)x4", dim: 1, centralizer: "0", characteristic: None, joined: false },
    ],
    &[
        MixedRow { element: "(1,4)x1-(1,5)x3", dim: 1, centralizer: "t1", characteristic: None, joined: false },
        MixedRow { element: "(3,5)x1+(1,3)x4", dim: 1, centralizer: "t1", characteristic: None, joined: false },
        MixedRow { element: "(1,4)x1-(3,5)x1-(1,5)x3-(1,3)x4", dim: 2, centralizer: "0", characteristic: None, joined: false },
    ],
    &[
        MixedRow { element: "(3,5)x1+(1,3)x4", dim: 2, centralizer: "t1", characteristic: None, joined: false },
        MixedRow { element: "()x1+(2,3)x1+(1,3,4,5)x1-(3,5)x2+(1,3)x3+(1,5)x4-(3,4)x4-(1,2,3,5)x4", dim: 3, centralizer: "0", characteristic: None, joined: true },
    ],
    &[
        MixedRow { element: "(1,4)x1", dim: 2, centralizer: "t3+u1", characteristic: None, joined: false },
        MixedRow { element: "(1,4)x1-(4,5)x4", dim: 3, centralizer: "t2+u1", characteristic: None, joined: false },
        MixedRow { element: "(1,5)x3+(4,5)x4", dim: 3, centralizer: "t2+u1", characteristic: None, joined: false },
        MixedRow { element: "()x2-(4,5)x4", dim: 3, centralizer: "t2+u1", characteristic: None, joined: false },
        MixedRow { element: "(2,3)x2-(4,5)x4", dim: 4, centralizer: "t2", characteristic: None, joined: false },
        MixedRow { element: "(2,3)x2-(1,5)x3", dim: 4, centralizer: "t2", characteristic: None, joined: false },
        MixedRow { element: "(1,4)x1+(2,3)x2", dim: 4, centralizer: "t2", characteristic: None, joined: false },
        MixedRow { element: "(1,4)x1+()x2-(4,5)x4", dim: 4, centralizer: "t1+u1", characteristic: None, joined: false },
        MixedRow { element: "(2,3)x2-(1,5)x3-(4,5)x4", dim: 5, centralizer: "t1", characteristic: None, joined: false },
        MixedRow { element: "(1,4)x1+(2,3)x2-(4,5)x4", dim: 5, centralizer: "t1", characteristic: None, joined: false },
        MixedRow { element: "(1,4)x1+(2,3)x2-(1,5)x3", dim: 5, centralizer: "t1", characteristic: None, joined: false },
        MixedRow { element: "()x2-(4,5)x4+(1,4)x1+(1,2,3,5)x3", dim: 6, centralizer: "0", characteristic: None, joined: false },
        MixedRow { element: "(1,4)x1+()x2+(2,3)x2+(2,3,4,5)x4", dim: 6, centralizer: "0", characteristic: None, joined: false },
    ],
    &[
        MixedRow { element: "(2,3)x2+(2,3,4,5)x4", dim: 1, centralizer: "A1", characteristic: None, joined: false },
        MixedRow { element: "-(2,5)x1+(3,5)x1-(1,2,4,5)x2+(1,3,4,5)x2", dim: 2, centralizer: "t1+u1", characteristic: None, joined: false },
        MixedRow { element: "-(2,4)x1+(3,4)x1-2(1,2,3,5)x1-(1,2)x2+(1,3)x2-2(4,5)x2-(2,5)x3+(3,5)x3+(1,2,4,5)x4-(1,3,4,5)x4", dim: 3, centralizer: "t1", characteristic: None, joined: true },
        MixedRow { element: "(1,4)x1-(2,5)x1+(3,5)x1-(1,2,4,5)x2+(1,3,4,5)x2-(1,5)x3", dim: 3, centralizer: "u1", characteristic: None, joined: false },
        MixedRow { element: "(1,4)x1-(2,4)x1+(3,4)x1-2(1,2,3,5)x1-(1,2)x2+(1,3)x2-2(4,5)x2-(1,5)x3-(2,5)x3+(3,5)x3+(1,2,4,5)x4-(1,3,4,5)x4", dim: 4, centralizer: "0", characteristic: None, joined: true },
    ],
    &[
        MixedRow { element: "(3,5)x1+(1,3)x4", dim: 3, centralizer: "t1+u2", characteristic: None, joined: false },
        MixedRow { element: "-()x1+(1,3,4,5)x1+(1,3)x3-(1,5)x4", dim: 4, centralizer: "t1+u1", characteristic: None, joined: false },
        MixedRow { element: "-()x1-(2,3)x1+(1,3,4,5)x1-(3,5)x2+(1,3)x3-(1,5)x4-(3,4)x4+(1,2,3,5)x4", dim: 5, centralizer: "u1", characteristic: None, joined: true },
        MixedRow { element: "(1,4)x1-(2,3)x1-(3,5)x2-(1,5)x3-(3,4)x4+(1,2,3,5)x4", dim: 6, centralizer: "0", characteristic: None, joined: false },
    ],
    &[
        MixedRow { element: "(1,4)x1", dim: 4, centralizer: "2A1+t2+u3", characteristic: Some(("0110", "1/3")), joined: false },
        MixedRow { element: "(1,4)x1-(4,5)x4", dim: 5, centralizer: "2A1+t2+u2", characteristic: Some(("0200", "2/3")), joined: false },
        MixedRow { element: "(1,2)x1+(1,4)x4-(4,5)x1", dim: 7, centralizer: "A1+t2+u3", characteristic: Some(("1110", "1")), joined: false },
        MixedRow { element: "(1,4)x1+()x2", dim: 7, centralizer: "t3+u5", characteristic: Some(("1111", "0")), joined: false },
        MixedRow { element: "(1,2)x1-(4,5)x4", dim: 8, centralizer: "A1+t2+u2", characteristic: Some(("2000", "4/3")), joined: false },
        MixedRow { element: "(1,4)x1+(2,3)x2", dim: 8, centralizer: "A1+t2+u2", characteristic: Some(("0022", "0")), joined: false },
        MixedRow { element: "(1,4)x1-(4,5)x4+()x2", dim: 8, centralizer: "t3+u4", characteristic: Some(("1201", "1/3")), joined: false },
        MixedRow { element: "(1,2)x1+(1,4)x4+(2,3,4,5)x4-(4,5)x1", dim: 9, centralizer: "2A1", characteristic: Some(("0000", "2")), joined: false },
        MixedRow { element: "(1,4)x1+(1,5)x2-(4,5)x4+()x3", dim: 9, centralizer: "t3+u3", characteristic: Some(("2200", "0")), joined: false },
        MixedRow { element: "(1,4)x1+(2,3)x2-(4,5)x4", dim: 9, centralizer: "A1+t2+u1", characteristic: Some(("0204", "2/3")), joined: false },
        MixedRow { element: "(1,2)x1+(1,4)x4-(4,5)x1+()x2", dim: 9, centralizer: "t2+u4", characteristic: Some(("2111", "2/3")), joined: false },
        MixedRow { element: "(1,2)x1-(4,5)x4+()x2", dim: 10, centralizer: "t2+u3", characteristic: Some(("3001", "1")), joined: false },
        MixedRow { element: "(1,2,3,4)x1+(1,4)x4-(4,5)x1+()x2", dim: 10, centralizer: "t2+u3", characteristic: Some(("0222", "2/3")), joined: false },
        MixedRow { element: "(1,2)x1+(1,4)x4+(1,5)x2-(4,5)x1+()x3", dim: 10, centralizer: "t2+u3", characteristic: Some(("3110", "1/3")), joined: false },
        MixedRow { element: "(1,2)x1+(1,5)x2-(4,5)x4+()x3", dim: 11, centralizer: "t2+u2", characteristic: Some(("4000", "2/3")), joined: false },
        MixedRow { element: "(1,2,3,4)x1+(1,4)x4+(1,5)x2-(4,5)x1+()x3", dim: 11, centralizer: "t2+u2", characteristic: Some(("2240", "0")), joined: false },
        MixedRow { element: "(1,2)x1+(1,4)x4+(1,5)x2+(3,4)x2-(4,5)x1+()x3", dim: 11, centralizer: "t1+u3", characteristic: Some(("2222", "0")), joined: false },
        MixedRow { element: "(1,2)x1+(3,4)x2-(4,5)x4", dim: 11, centralizer: "t2+u2", characteristic: Some(("1213", "4/3")), joined: false },
        MixedRow { element: "(1,2)x1+(1,4)x4+(2,3)x2-(4,5)x1", dim: 11, centralizer: "t2+u2", characteristic: Some(("1114", "1")), joined: false },
        MixedRow { element: "(1,2)x1+(2,3)x2+(3,4)x2-(4,5)x4", dim: 12, centralizer: "t1+u2", characteristic: Some(("2004", "4/3")), joined: false },
        MixedRow { element: "(1,2,3,4)x1+(1,5)x2-(4,5)x4+()x3", dim: 12, centralizer: "t2+u1", characteristic: Some(("2640", "4/3")), joined: false },
        MixedRow { element: "(1,2)x1+(1,4)x4+(1,5)x2+(2,3)x2-(4,5)x1+()x3", dim: 12, centralizer: "t1+u2", characteristic: Some(("3114", "1/3")), joined: false },
        MixedRow { element: "(1,2,3,4)x1+(1,2)x4-(2,5)x1-(4,5)x4+()x2", dim: 12, centralizer: "t1+u2", characteristic: Some(("1113", "2")), joined: false },
        MixedRow { element: "(1,2)x1+(1,5)x2+(3,4)x2-(4,5)x4+()x3", dim: 12, centralizer: "t1+u2", characteristic: Some(("3213", "2/3")), joined: false },
        MixedRow { element: "-(1,2,3,4)x4+(1,2)x1+(2,3,4,5)x1-(4,5)x4+()x2", dim: 13, centralizer: "t1+u1", characteristic: Some(("0004", "2")), joined: false },
        MixedRow { element: "(1,2)x1+(1,5)x2+(2,3)x2+(3,4)x2-(4,5)x4+()x3", dim: 13, centralizer: "u2", characteristic: Some(("4004", "2/3")), joined: false },
        MixedRow { element: "(1,2,3,4)x1+(1,2)x4+(1,5)x2-(2,5)x1-(4,5)x4+()x3", dim: 13, centralizer: "t1+u1", characteristic: Some(("4440", "2")), joined: false },
        MixedRow { element: "(1,2,3,4)x1+(1,4)x4+(1,5)x2+(2,3)x2-(4,5)x1+()x3", dim: 13, centralizer: "t1+u1", characteristic: Some(("2244", "0")), joined: false },
        MixedRow { element: "(1,2,3,4)x1+(1,5)x2+(3,4)x2-(4,5)x4+()x3", dim: 13, centralizer: "t1+u1", characteristic: Some(("1741", "1")), joined: false },
        MixedRow { element: "(1,2)x1-(1,5)x3+(3,4)x2-(4,5)x4", dim: 13, centralizer: "t1+u1", characteristic: Some(("4422", "0")), joined: false },
        MixedRow { element: "(1,2)x1+(1,3,4,5)x3-(1,5)x3+(3,4)x2-(4,5)x4", dim: 14, centralizer: "u1", characteristic: Some(("0840", "2/3")), joined: false },
        MixedRow { element: "(1,2,3,4)x1+(1,2)x4+(1,5)x2-(2,5)x1+(3,4)x2-(4,5)x4+()x3", dim: 14, centralizer: "u1", characteristic: Some(("4444", "2")), joined: false },
        MixedRow { element: "(1,2,3,4)x1+(1,5)x2+(2,3)x2-(4,5)x4+()x3", dim: 14, centralizer: "t1", characteristic: Some(("2648", "4/3")), joined: false },
        MixedRow { element: "(1,2,3,4)x1+(1,2)x4-(1,5)x3-(2,5)x1+(3,4)x2-(4,5)x4", dim: 15, centralizer: "0", characteristic: Some(("8884", "2")), joined: false },
        MixedRow { element: "(1,2,3,4)x1+(1,2)x4+(1,5)x2+(2,3)x2-(2,5)x1-(4,5)x4+()x3", dim: 15, centralizer: "0", characteristic: Some(("4448", "2")), joined: false },
    ],
];
