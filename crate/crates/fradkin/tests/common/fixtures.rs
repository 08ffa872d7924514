//! Transcribed commutation tables; rows and columns follow the order of the
//! regenerated tables.

pub const A_PLUS_2: &[&[&str]] = &[
    &["0", "-4w f21", "4w f12"],
    &["4w f21", "0", "-2w f11"],
    &["-4w f12", "2w f11", "0"],
];

pub const SU_2: &[&[&str]] = &[&["0", "2t3", "-2t2"], &["-2t3", "0", "2t1"], &["2t2", "-2t1", "0"]];

pub const A_PLUS_3: &[&[&str]] = &[
    &["0", "0", "-2w f21", "-4w f31", "2w f12", "-2w f32", "4w f13", "2w f23"],
    &["0", "0", "2w f21", "-2w f31", "-2w f12", "-4w f32", "2w f13", "4w f23"],
    &[
        "2w f21",
        "-2w f21",
        "0",
        "w(f23 - f32)",
        "2w(f22 - f11)",
        "-w(f13 + f31)",
        "w(f23 + f32)",
        "w(f13 - f31)",
    ],
    &[
        "4w f31",
        "2w f31",
        "w(f32 - f23)",
        "0",
        "w(f23 + f32)",
        "w(f12 - f21)",
        "-2w f11",
        "-w(f12 + f21)",
    ],
    &[
        "-2w f12",
        "2w f12",
        "2w(f11 - f22)",
        "-w(f23 + f32)",
        "0",
        "w(f13 - f31)",
        "w(f23 - f32)",
        "w(f13 + f31)",
    ],
    &[
        "2w f32",
        "4w f32",
        "w(f13 + f31)",
        "w(f21 - f12)",
        "w(f31 - f13)",
        "0",
        "-w(f12 + f21)",
        "-2w f22",
    ],
    &[
        "-4w f13",
        "-2w f13",
        "-w(f23 + f32)",
        "2w f11",
        "w(f32 - f23)",
        "w(f12 + f21)",
        "0",
        "w(f12 - f21)",
    ],
    &[
        "-2w f23",
        "-4w f23",
        "w(f31 - f13)",
        "w(f12 + f21)",
        "-w(f13 + f31)",
        "2w f22",
        "w(f21 - f12)",
        "0",
    ],
];

pub const SU_3: &[&[&str]] = &[
    &["0", "0", "t6", "t7", "2t8", "-t3", "-t4", "-2t5"],
    &["0", "0", "-t6", "2t7", "t8", "t3", "-2t4", "-t5"],
    &["-t6", "t6", "0", "-t5", "t4", "2(t1 - t2)", "-t8", "t7"],
    &["-t7", "-2t7", "t5", "0", "-t3", "t8", "2t2", "-t6"],
    &["-2t8", "-t8", "-t4", "t3", "0", "t7", "-t6", "2t1"],
    &["t3", "-t3", "2(t2 - t1)", "-t8", "-t7", "0", "t5", "t4"],
    &["t4", "2t4", "t8", "-2t2", "t6", "-t5", "0", "-t3"],
    &["2t5", "t5", "-t7", "t6", "-2t1", "-t4", "t3", "0"],
];

pub const A_MINUS_2: &[&[&str]] = &[
    &["0", "-4w f12", "4w f21"],
    &["4w f12", "0", "-2w f11"],
    &["-4w f21", "2w f11", "0"],
];

pub const SL_2: &[&[&str]] = &[&["0", "-2t2", "2t3"], &["2t2", "0", "-t1"], &["-2t3", "t1", "0"]];

pub const A_MINUS_3: &[&[&str]] = &[
    &["0", "0", "-2w f12", "-4w f13", "-2w f23", "2w f21", "4w f31", "2w f32"],
    &["0", "0", "2w f12", "-2w f13", "-4w f23", "-2w f21", "2w f31", "4w f32"],
    &["2w f12", "-2w f12", "0", "0", "-2w f13", "2w(f22 - f11)", "2w f32", "0"],
    &["4w f13", "2w f13", "0", "0", "0", "2w f23", "-2w f11", "-2w f12"],
    &["2w f23", "4w f23", "2w f13", "0", "0", "0", "-2w f21", "-2w f22"],
    &["-2w f21", "2w f21", "2w(f11 - f22)", "-2w f23", "0", "0", "0", "2w f31"],
    &["-4w f31", "-2w f31", "-2w f32", "2w f11", "2w f21", "0", "0", "0"],
    &["-2w f32", "-4w f32", "0", "2w f12", "2w f22", "-2w f31", "0", "0"],
];

pub const SL_3: &[&[&str]] = &[
    &["0", "0", "-e12", "-2e13", "-e23", "e21", "2e31", "e32"],
    &["0", "0", "e12", "-e13", "-2e23", "-e21", "e31", "2e32"],
    &["e12", "-e12", "0", "0", "e13", "-H1 + H2", "-e32", "0"],
    &["2e13", "e13", "0", "0", "0", "-e23", "-H1", "e12"],
    &["e23", "2e23", "-e13", "0", "0", "0", "e21", "-H2"],
    &["-e21", "e21", "H1 - H2", "e23", "0", "0", "0", "-e31"],
    &["-2e31", "-e31", "e32", "H1", "-e21", "0", "0", "0"],
    &["-e32", "-2e32", "0", "-e12", "H2", "e31", "0", "0"],
];

// the second row is printed with the label F12; the entries are those of F22
pub const A_ZERO_2: &[&[&str]] = &[
    &["0", "0", "0", "-2F12"],
    &["0", "0", "0", "2F12"],
    &["0", "0", "0", "F11 - F22"],
    &["2F12", "-2F12", "F22 - F11", "0"],
];

pub const A_ZERO_3: &[&[&str]] = &[
    &["0", "0", "0", "0", "0", "0", "-2F12", "-2F13", "0"],
    &["0", "0", "0", "0", "0", "0", "2F12", "0", "-2F23"],
    &["0", "0", "0", "0", "0", "0", "0", "2F13", "2F23"],
    &["0", "0", "0", "0", "0", "0", "F11 - F22", "-F23", "-F13"],
    &["0", "0", "0", "0", "0", "0", "-F23", "F11 - F33", "F12"],
    &["0", "0", "0", "0", "0", "0", "F13", "F12", "F22 - F33"],
    &["2F12", "-2F12", "0", "F22 - F11", "F23", "-F13", "0", "L23", "-L13"],
    &["2F13", "0", "-2F13", "F23", "F33 - F11", "-F12", "-L23", "0", "L12"],
    &["0", "2F23", "-2F23", "F13", "-F12", "F33 - F22", "L13", "-L12", "0"],
];

pub fn fixtures() -> Vec<(&'static str, &'static [&'static [&'static str]])> {
    vec![
        ("a_plus_2", A_PLUS_2),
        ("su_2", SU_2),
        ("a_plus_3", A_PLUS_3),
        ("su_3", SU_3),
        ("a_minus_2", A_MINUS_2),
        ("sl_2", SL_2),
        ("a_minus_3", A_MINUS_3),
        ("sl_3", SL_3),
        ("a_zero_2", A_ZERO_2),
        ("a_zero_3", A_ZERO_3),
    ]
}
