//! Exact combinatorics of parallelogram polyominoes: the three statistics
//! (area, bounce, dinv), their q,t-Narayana generating polynomials, the
//! Dyck-path and bounce-to-area bijections, refined recursions, and the
//! parking-function side of the story.

pub mod bijections;
pub mod cli;
pub mod dyck;
pub mod error;
pub mod parking;
pub mod polyomino;
pub mod qtpoly;
pub mod recursion;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod testdata {
    //! Shared worked-example data used as golden values across modules.

    /// The area word of the running 12x7 example polyomino.
    pub const EXAMPLE_WORD: &str = "0b 1 1b 2 2b 3 2 2 2b 1 1b 2 1 1 1b 2 2b 2 2";

    /// The area word of its image under the bounce-to-area bijection.
    pub const EXAMPLE_IMAGE_WORD: &str =
        "0b 1 1 1b 1b 2 2b 2b 3 3b 3b 4 4 4b 4b 3b 1 1b 1b";

    /// The eight prescriptions read off the labeled boundary paths.
    pub const EXAMPLE_PRESCRIPTIONS: [&str; 8] = [
        "0b 1 1 1",
        "1 1 1b 1b 1 1b 1b",
        "1b 1b 2 1b 1b",
        "2 2b 2b",
        "2b 2b 3",
        "3 3b 3b 3b",
        "3b 3b 4 4 3b",
        "4 4 4b 4b",
    ];

    /// The partial words after each prescription is merged in; the last is
    /// the final area word above.
    pub const EXAMPLE_PARTIAL_WORDS: [&str; 8] = [
        "0b 1 1 1",
        "0b 1 1 1b 1b 1 1b 1b",
        "0b 1 1 1b 1b 2 1 1b 1b",
        "0b 1 1 1b 1b 2 2b 2b 1 1b 1b",
        "0b 1 1 1b 1b 2 2b 2b 3 1 1b 1b",
        "0b 1 1 1b 1b 2 2b 2b 3 3b 3b 3b 1 1b 1b",
        "0b 1 1 1b 1b 2 2b 2b 3 3b 3b 4 4 3b 1 1b 1b",
        "0b 1 1 1b 1b 2 2b 2b 3 3b 3b 4 4 4b 4b 3b 1 1b 1b",
    ];

    /// The size-11 parking-function example: (car, level) dominoes.
    pub const SIZE11_PF: [(u32, u32); 11] = [
        (5, 0),
        (11, 1),
        (1, 1),
        (9, 2),
        (6, 0),
        (8, 1),
        (3, 0),
        (4, 1),
        (7, 2),
        (10, 3),
        (2, 3),
    ];

    /// The size-16 shuffle parking-function example with level-0 counts
    /// (3, 1).
    pub const SIZE16_PF: [(u32, u32); 16] = [
        (3, 0),
        (13, 1),
        (6, 1),
        (15, 2),
        (8, 2),
        (7, 2),
        (16, 3),
        (12, 1),
        (5, 1),
        (14, 2),
        (9, 0),
        (2, 0),
        (11, 1),
        (1, 0),
        (10, 1),
        (4, 1),
    ];
}
