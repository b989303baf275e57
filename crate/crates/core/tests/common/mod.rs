#![allow(dead_code)]

use qpoly::coxeter::Diagram;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A positive index in `[0.3, 3.0)`.
pub fn index(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0.3..3.0)
}

/// Random indices with the given zero pattern, pairwise distinct when non-zero.
pub fn draw(rng: &mut ChaCha8Rng, support: [bool; 3]) -> [f64; 3] {
    loop {
        let a = support.map(|s| if s { index(rng) } else { 0.0 });
        let distinct = (0..3).all(|i| (0..i).all(|j| a[i] == 0.0 || (a[i] - a[j]).abs() > 0.05));
        if distinct {
            return a;
        }
    }
}

pub struct Family {
    pub group: Diagram,
    pub support: [bool; 3],
    /// a3 tied to a1.
    pub symmetric: bool,
    pub counts: (usize, usize, usize),
    pub kinds: &'static [(&'static str, usize)],
}

pub const FAMILIES: &[Family] = &[
    Family {
        group: Diagram::A3,
        support: [true, true, false],
        symmetric: false,
        counts: (12, 18, 8),
        kinds: &[("isogonal-hexagon", 4), ("equilateral-triangle", 4)],
    },
    Family {
        group: Diagram::A3,
        support: [true, false, true],
        symmetric: false,
        counts: (12, 24, 14),
        kinds: &[("equilateral-triangle", 8), ("rectangle", 6)],
    },
    Family {
        group: Diagram::A3,
        support: [true, true, true],
        symmetric: false,
        counts: (24, 36, 14),
        kinds: &[("isogonal-hexagon", 8), ("rectangle", 6)],
    },
    Family {
        group: Diagram::A3,
        support: [true, true, true],
        symmetric: true,
        counts: (24, 36, 14),
        kinds: &[("isogonal-hexagon", 8), ("square", 6)],
    },
    Family {
        group: Diagram::B3,
        support: [true, true, false],
        symmetric: false,
        counts: (24, 36, 14),
        kinds: &[("isogonal-hexagon", 8), ("square", 6)],
    },
    Family {
        group: Diagram::B3,
        support: [true, false, true],
        symmetric: false,
        counts: (24, 48, 26),
        kinds: &[("equilateral-triangle", 8), ("square", 6), ("rectangle", 12)],
    },
    Family {
        group: Diagram::B3,
        support: [false, true, true],
        symmetric: false,
        counts: (24, 36, 14),
        kinds: &[("equilateral-triangle", 8), ("isogonal-octagon", 6)],
    },
    Family {
        group: Diagram::B3,
        support: [true, true, true],
        symmetric: false,
        counts: (48, 72, 26),
        kinds: &[("isogonal-hexagon", 8), ("rectangle", 12), ("isogonal-octagon", 6)],
    },
    Family {
        group: Diagram::H3,
        support: [true, true, false],
        symmetric: false,
        counts: (60, 90, 32),
        kinds: &[("isogonal-decagon", 12), ("equilateral-triangle", 20)],
    },
    Family {
        group: Diagram::H3,
        support: [true, false, true],
        symmetric: false,
        counts: (60, 120, 62),
        kinds: &[
            ("regular-pentagon", 12),
            ("equilateral-triangle", 20),
            ("rectangle", 30),
        ],
    },
    Family {
        group: Diagram::H3,
        support: [false, true, true],
        symmetric: false,
        counts: (60, 90, 32),
        kinds: &[("regular-pentagon", 12), ("isogonal-hexagon", 20)],
    },
    Family {
        group: Diagram::H3,
        support: [true, true, true],
        symmetric: false,
        counts: (120, 180, 62),
        kinds: &[("isogonal-decagon", 12), ("isogonal-hexagon", 20), ("rectangle", 30)],
    },
];

impl Family {
    pub fn draw(&self, rng: &mut ChaCha8Rng) -> [f64; 3] {
        let mut a = draw(rng, self.support);
        if self.symmetric {
            a[2] = a[0];
        }
        a
    }

    /// H3 families use the σ normalisation.
    pub fn sigma(&self) -> bool {
        self.group == Diagram::H3
    }
}
