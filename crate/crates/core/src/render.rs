//! ASCII drawing of a path on its `2n x n` lattice grid.
//!
//! North steps go up one row, east steps right one column; the path stays
//! weakly above the line through `(0,0)` and `(2n,n)`. Legend: `o` path
//! vertex, `-`/`|` path edges, `/` lattice points on the boundary line,
//! `.` other lattice points.

use crate::path::{DyckPath, Step};

pub fn render_path(path: &DyckPath) -> String {
    let n = path.n();
    let (width, height) = (4 * n + 1, 2 * n + 1);
    let mut canvas = vec![vec![' '; width]; height];
    let cell = |x: usize, y: usize| (2 * (n - y), 2 * x);

    for y in 0..=n {
        for x in 0..=2 * n {
            let (r, c) = cell(x, y);
            canvas[r][c] = if x == 2 * y { '/' } else { '.' };
        }
    }

    let (mut x, mut y) = (0, 0);
    let (r, c) = cell(x, y);
    canvas[r][c] = 'o';
    for step in path.steps() {
        let (r, c) = cell(x, y);
        match step {
            Step::North => {
                canvas[r - 1][c] = '|';
                y += 1;
            }
            Step::East => {
                canvas[r][c + 1] = '-';
                x += 1;
            }
        }
        let (r, c) = cell(x, y);
        canvas[r][c] = 'o';
    }

    let mut out = String::new();
    for row in canvas {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
