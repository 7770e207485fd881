//! The published list of circulant-pair `[70, 35, 12]` codes, transcribed
//! verbatim: `(beta, tap string, K, number of ones)`.
//!
//! Two strings listed under `K = 14` have 15 characters. They are kept as
//! printed and reported as suspect data instead of being corrected.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableEntry {
    pub beta: u64,
    pub poly: &'static str,
    pub window: usize,
    pub ones: usize,
}

impl TableEntry {
    /// String length matches `K` and the ones count matches the table.
    pub fn is_consistent(&self) -> bool {
        self.poly.len() == self.window
            && self.poly.bytes().filter(|&b| b == b'1').count() == self.ones
    }
}

const fn e(beta: u64, poly: &'static str, window: usize, ones: usize) -> TableEntry {
    TableEntry {
        beta,
        poly,
        window,
        ones,
    }
}

pub const TABLE: &[TableEntry] = &[
    e(140, "11111101101", 11, 9),
    e(350, "111011000101", 12, 7),
    e(420, "111010000111", 12, 7),
    e(140, "1110100011001", 13, 7),
    e(140, "1100000111101", 13, 7),
    e(280, "1110010001101", 13, 7),
    e(350, "1100111010001", 13, 7),
    e(420, "1100011101001", 13, 7),
    e(140, "1110111010011", 13, 9),
    e(280, "1110110010111", 13, 9),
    e(350, "1111011100101", 13, 9),
    e(350, "1111011010101", 13, 9),
    e(140, "11110001001001", 14, 7),
    e(280, "11001110100001", 14, 7),
    e(350, "11110010010001", 14, 7),
    e(350, "11101011000001", 14, 7),
    e(350, "11100101010001", 14, 7),
    e(350, "11100010101001", 14, 7),
    e(350, "11011010000101", 14, 7),
    e(350, "11001011001001", 14, 7),
    e(350, "10110101010001", 14, 7),
    e(420, "11010010110001", 14, 7),
    e(420, "10110111000001", 14, 7),
    e(280, "11110101011001", 14, 9),
    e(280, "11101111100001", 14, 9),
    e(350, "11110011100011", 14, 9),
    e(350, "111000111101011", 14, 9),
    e(350, "111000011110111", 14, 9),
    e(350, "11011111000011", 14, 9),
    e(420, "10111111001001", 14, 9),
    e(140, "110011100001001", 15, 7),
    e(140, "110011010001001", 15, 7),
    e(280, "110101000010011", 15, 7),
    e(350, "110101000001101", 15, 7),
    e(350, "110100011100001", 15, 7),
    e(350, "110010111000001", 15, 7),
    e(350, "110000111100001", 15, 7),
    e(350, "101110000001101", 15, 7),
    e(350, "101100100100101", 15, 7),
    e(350, "101100001101001", 15, 7),
    e(420, "111010001000101", 15, 7),
    e(420, "111000100100101", 15, 7),
    e(420, "110100101000101", 15, 7),
    e(140, "111100101100101", 15, 9),
    e(140, "111010011100011", 15, 9),
    e(140, "111000111101001", 15, 9),
    e(140, "111000111010011", 15, 9),
    e(280, "111001011000111", 15, 9),
    e(280, "110111010011001", 15, 9),
    e(350, "111011001011001", 15, 9),
    e(350, "110111010001101", 15, 9),
    e(350, "110110011010101", 15, 9),
    e(350, "110101011011001", 15, 9),
    e(420, "111110010101001", 15, 9),
    e(420, "111100011010011", 15, 9),
    e(420, "111100001100111", 15, 9),
    e(420, "111001011101001", 15, 9),
    e(420, "110110010011101", 15, 9),
    e(420, "110101100110101", 15, 9),
    e(140, "1110000000101011", 16, 7),
    e(140, "1101000110010001", 16, 7),
    e(140, "1101000001100101", 16, 7),
    e(280, "1110010100010001", 16, 7),
    e(280, "1101010010001001", 16, 7),
];
