//! ASCII board rendering.

use queens::Placement;

/// Renders `n` lines of `n` characters with row 1 at the top: `Q` for a
/// queen, `.` for an empty square. The result ends with a newline.
pub fn render_ascii(p: &Placement) -> String {
    let n = p.n();
    let mut grid = vec![vec!['.'; n]; n];
    for &(row, col) in p.queens() {
        grid[row - 1][col - 1] = 'Q';
    }
    let mut out = String::with_capacity(n * (n + 1));
    for row in grid {
        out.extend(row);
        out.push('\n');
    }
    out
}
