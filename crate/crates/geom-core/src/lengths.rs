//! Quantized lengths and the linear relation between the two unknown dot
//! products.

use angmom_exact::TwelveJInput;

/// The nine large labels of the vector diagram, as twice-integers, in the
/// layout `{j1 j2 j12; j3 j4 j34; j13 j24 j6}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NineLabels {
    pub t: [i32; 9],
}

impl NineLabels {
    pub fn new(t: [i32; 9]) -> Self {
        NineLabels { t }
    }

    /// Drop the small spin and its two couplings from a 12j input.
    pub fn from_twelvej(inp: &TwelveJInput) -> Self {
        NineLabels {
            t: [
                inp.j1.twice(),
                inp.j2.twice(),
                inp.j12.twice(),
                inp.j3.twice(),
                inp.j4.twice(),
                inp.j34.twice(),
                inp.j13.twice(),
                inp.j24.twice(),
                inp.j6.twice(),
            ],
        }
    }

    pub fn lengths(&self) -> JLengths {
        let l = |i: usize| (self.t[i] as f64 + 1.0) / 2.0;
        JLengths {
            j1: l(0),
            j2: l(1),
            j12: l(2),
            j3: l(3),
            j4: l(4),
            j34: l(5),
            j13: l(6),
            j24: l(7),
            j6: l(8),
        }
    }

    /// Parity of twice the lower edge of the intermediate-coupling window
    /// (the `|J1 + J6|` channel); enters the semiclassical phase bookkeeping.
    pub fn channel_parity(&self) -> i32 {
        let lo = (self.t[0] - self.t[8])
            .abs()
            .max((self.t[1] - self.t[5]).abs())
            .max((self.t[3] - self.t[7]).abs());
        lo.rem_euclid(2)
    }
}

/// Classical lengths `J = j + 1/2` of the nine vectors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JLengths {
    pub j1: f64,
    pub j2: f64,
    pub j12: f64,
    pub j3: f64,
    pub j4: f64,
    pub j34: f64,
    pub j13: f64,
    pub j24: f64,
    pub j6: f64,
}

impl JLengths {
    /// Lengths in the canonical edge order
    /// `J1 J2 J3 J4 J6 J12 J34 J13 J24`.
    pub fn edge_order(&self) -> [f64; 9] {
        [
            self.j1, self.j2, self.j3, self.j4, self.j6, self.j12, self.j34, self.j13, self.j24,
        ]
    }

    pub fn max_len(&self) -> f64 {
        self.edge_order().iter().cloned().fold(0.0, f64::max)
    }
}

/// `x + y` where `x = J1.J4`, `y = J2.J3`, from squaring the closure
/// relation: `(J1+J2+J3+J4)^2 = J6^2`.
pub fn xy_sum(l: &JLengths) -> f64 {
    0.5 * (l.j1 * l.j1 + l.j2 * l.j2 + l.j3 * l.j3 + l.j4 * l.j4 + l.j6 * l.j6
        - l.j12 * l.j12
        - l.j34 * l.j34
        - l.j13 * l.j13
        - l.j24 * l.j24)
}

/// `quantize_lengths`: the map `j -> j + 1/2` for the nine large labels.
pub fn quantize_lengths(inp: &TwelveJInput) -> JLengths {
    NineLabels::from_twelvej(inp).lengths()
}

#[cfg(test)]
mod tests {
    use super::*;
    use angmom_exact::HalfInt;

    #[test]
    fn paper_style_lengths() {
        let h = HalfInt::from_twice;
        let inp = TwelveJInput::new(
            h(51),
            h(59),
            h(42),
            h(44),
            h(55),
            h(53),
            h(54),
            h(52),
            h(54),
            h(50),
            h(2),
            h(20),
        );
        let l = quantize_lengths(&inp);
        assert_eq!(l.j1, 26.0); // j1 = 51/2
        assert_eq!(l.j12, 21.5); // j12 = 21
        assert_eq!(l.j6, 10.5);
        let zero = TwelveJInput::from_twice([0; 12]);
        assert_eq!(quantize_lengths(&zero).j1, 0.5);
    }

    #[test]
    fn xy_sum_unit_lengths() {
        // all nine lengths 1: (5 - 4)/2
        let l = JLengths {
            j1: 1.0,
            j2: 1.0,
            j12: 1.0,
            j3: 1.0,
            j4: 1.0,
            j34: 1.0,
            j13: 1.0,
            j24: 1.0,
            j6: 1.0,
        };
        assert_eq!(xy_sum(&l), 0.5);
    }

    #[test]
    fn xy_sum_scales_quadratically() {
        let l = NineLabels::new([51, 59, 42, 55, 53, 54, 54, 50, 20]).lengths();
        let scaled = JLengths {
            j1: 3.0 * l.j1,
            j2: 3.0 * l.j2,
            j12: 3.0 * l.j12,
            j3: 3.0 * l.j3,
            j4: 3.0 * l.j4,
            j34: 3.0 * l.j34,
            j13: 3.0 * l.j13,
            j24: 3.0 * l.j24,
            j6: 3.0 * l.j6,
        };
        let r = xy_sum(&scaled) / xy_sum(&l);
        assert!((r - 9.0).abs() < 1e-12);
    }

    #[test]
    fn xy_sum_exact_rational_check() {
        // independent evaluation with exact rational arithmetic over 2J values
        let labels = NineLabels::new([51, 59, 42, 55, 53, 54, 54, 50, 20]);
        let l = labels.lengths();
        // 2J = t + 1; xy_sum = (sum of (2J)^2 signs) / 8
        let sq = |i: usize| ((labels.t[i] + 1) as i64).pow(2);
        let num = sq(0) + sq(1) + sq(3) + sq(4) + sq(8) - sq(2) - sq(5) - sq(6) - sq(7);
        assert_eq!(xy_sum(&l) * 8.0, num as f64);
    }
}
