//! Rectangular cell grid: node/aisle classification, section labels, and
//! all-pairs shortest-path distances between node cells.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Default 10x7 layout: 35 node cells (three stock columns plus end caps),
/// nine sections `a`..`i` tiled 3x3 over the grid, entry at (1,1).
pub const DEFAULT_LAYOUT: &str = include_str!("../assets/default_layout.txt");

/// Default cell edge length in meters.
pub const DEFAULT_CELL_SIZE_M: f64 = 5.0;

/// One grid cell, addressed by 1-based (row, col).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u16,
    pub col: u16,
}

impl Cell {
    pub const fn new(row: u16, col: u16) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Cell classification. `Blocked` cells (char `X`) are not traversable and
/// exist so that disconnected layouts are expressible; the default layout
/// has none.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellKind {
    Node,
    Aisle,
    Blocked,
}

/// Index of a node cell within a [`Layout`]. The entry node is always
/// `NodeId(0)`; the remaining node cells follow in row-major order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

/// Errors from layout parsing and grid queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridError {
    EmptyGrid,
    NotRectangular { row: usize },
    UnknownChar { ch: char, cell: Cell },
    NoEntry,
    DuplicateEntry { cell: Cell },
    Disconnected { cell: Cell },
    SectionsOverlap { a: char, b: char },
    NotANode { cell: Cell },
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::EmptyGrid => write!(f, "layout has no grid rows"),
            GridError::NotRectangular { row } => {
                write!(f, "grid row {row} has a different length than row 1")
            }
            GridError::UnknownChar { ch, cell } => {
                write!(f, "unknown layout character {ch:?} at cell {cell}")
            }
            GridError::NoEntry => write!(f, "layout has no entry cell `E`"),
            GridError::DuplicateEntry { cell } => {
                write!(f, "duplicate entry cell `E` at {cell}")
            }
            GridError::Disconnected { cell } => {
                write!(f, "cell {cell} is disconnected from the entry")
            }
            GridError::SectionsOverlap { a, b } => {
                write!(f, "sections `{a}` and `{b}` do not form disjoint rectangular blocks")
            }
            GridError::NotANode { cell } => write!(f, "cell {cell} is not a node cell"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GridError {}

/// The cell grid: classification mask, entry cell, and per-node section
/// labels. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    rows: u16,
    cols: u16,
    cell_size_m: f64,
    kinds: Vec<CellKind>,
    entry: Cell,
    entry_section: u8,
    nodes: Vec<Cell>,
    node_at: Vec<Option<NodeId>>,
    sections: Vec<u8>,
}

impl Layout {
    /// Parses the plain-text layout format: one line per grid row, `.` for
    /// aisle, `a`..`z` for a node cell in that section, `E` for the entry
    /// node, `X` for a blocked cell. Lines starting with `#` are comments.
    pub fn parse(text: &str) -> Result<Self, GridError> {
        Self::parse_with(text, DEFAULT_CELL_SIZE_M, b'a')
    }

    /// As [`Layout::parse`] with explicit cell size and entry-section label.
    pub fn parse_with(text: &str, cell_size_m: f64, entry_section: u8) -> Result<Self, GridError> {
        let lines: Vec<&str> = text
            .lines()
            .map(|l| l.trim_end_matches('\r'))
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if lines.is_empty() {
            return Err(GridError::EmptyGrid);
        }
        let cols = lines[0].chars().count();
        if cols == 0 {
            return Err(GridError::EmptyGrid);
        }
        let rows = lines.len();

        let mut kinds = vec![CellKind::Aisle; rows * cols];
        let mut entry: Option<Cell> = None;
        // (cell, section letter) for non-entry nodes, row-major.
        let mut node_cells: Vec<(Cell, u8)> = Vec::new();

        for (r, line) in lines.iter().enumerate() {
            let row_chars: Vec<char> = line.chars().collect();
            if row_chars.len() != cols {
                return Err(GridError::NotRectangular { row: r + 1 });
            }
            for (c, ch) in row_chars.iter().enumerate() {
                let cell = Cell::new(r as u16 + 1, c as u16 + 1);
                let idx = r * cols + c;
                match ch {
                    '.' => kinds[idx] = CellKind::Aisle,
                    'X' => kinds[idx] = CellKind::Blocked,
                    'E' => {
                        if let Some(prev) = entry {
                            let _ = prev;
                            return Err(GridError::DuplicateEntry { cell });
                        }
                        entry = Some(cell);
                        kinds[idx] = CellKind::Node;
                    }
                    'a'..='z' => {
                        kinds[idx] = CellKind::Node;
                        node_cells.push((cell, *ch as u8));
                    }
                    _ => return Err(GridError::UnknownChar { ch: *ch, cell }),
                }
            }
        }

        let entry = entry.ok_or(GridError::NoEntry)?;
        let mut nodes = Vec::with_capacity(node_cells.len() + 1);
        let mut sections = Vec::with_capacity(node_cells.len() + 1);
        nodes.push(entry);
        sections.push(entry_section);
        for (cell, sec) in &node_cells {
            nodes.push(*cell);
            sections.push(*sec);
        }

        let mut node_at = vec![None; rows * cols];
        for (i, cell) in nodes.iter().enumerate() {
            node_at[(cell.row as usize - 1) * cols + (cell.col as usize - 1)] = Some(NodeId(i));
        }

        let layout = Layout {
            rows: rows as u16,
            cols: cols as u16,
            cell_size_m,
            kinds,
            entry,
            entry_section,
            nodes,
            node_at,
            sections,
        };
        layout.check_connected()?;
        layout.check_sections_rectangular()?;
        Ok(layout)
    }

    /// Serializes back to the layout text format. `parse(to_text(l)) == l`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in 1..=self.rows {
            for c in 1..=self.cols {
                let cell = Cell::new(r, c);
                let ch = match self.kind(cell) {
                    CellKind::Aisle => '.',
                    CellKind::Blocked => 'X',
                    CellKind::Node => {
                        if cell == self.entry {
                            'E'
                        } else {
                            self.sections[self.node_id(cell).unwrap().0] as char
                        }
                    }
                };
                out.push(ch);
            }
            out.push('\n');
        }
        out
    }

    fn check_connected(&self) -> Result<(), GridError> {
        let total = self.kinds.iter().filter(|k| **k != CellKind::Blocked).count();
        let mut seen = vec![false; self.kinds.len()];
        let mut queue = VecDeque::new();
        let start = self.cell_index(self.entry);
        seen[start] = true;
        queue.push_back(self.entry);
        let mut reached = 1usize;
        while let Some(cell) = queue.pop_front() {
            for next in self.adjacent(cell) {
                let idx = self.cell_index(next);
                if !seen[idx] && self.kinds[idx] != CellKind::Blocked {
                    seen[idx] = true;
                    reached += 1;
                    queue.push_back(next);
                }
            }
        }
        if reached == total {
            return Ok(());
        }
        for r in 1..=self.rows {
            for c in 1..=self.cols {
                let cell = Cell::new(r, c);
                let idx = self.cell_index(cell);
                if self.kinds[idx] != CellKind::Blocked && !seen[idx] {
                    return Err(GridError::Disconnected { cell });
                }
            }
        }
        unreachable!("reached != total implies an unseen traversable cell")
    }

    fn check_sections_rectangular(&self) -> Result<(), GridError> {
        // Bounding boxes of distinct sections must be disjoint rectangles.
        struct BBox {
            sec: u8,
            r0: u16,
            r1: u16,
            c0: u16,
            c1: u16,
        }
        let mut boxes: Vec<BBox> = Vec::new();
        for (i, cell) in self.nodes.iter().enumerate() {
            let sec = self.sections[i];
            match boxes.iter_mut().find(|b| b.sec == sec) {
                Some(b) => {
                    b.r0 = b.r0.min(cell.row);
                    b.r1 = b.r1.max(cell.row);
                    b.c0 = b.c0.min(cell.col);
                    b.c1 = b.c1.max(cell.col);
                }
                None => boxes.push(BBox {
                    sec,
                    r0: cell.row,
                    r1: cell.row,
                    c0: cell.col,
                    c1: cell.col,
                }),
            }
        }
        for (i, a) in boxes.iter().enumerate() {
            for b in &boxes[i + 1..] {
                let disjoint =
                    a.r1 < b.r0 || b.r1 < a.r0 || a.c1 < b.c0 || b.c1 < a.c0;
                if !disjoint {
                    return Err(GridError::SectionsOverlap {
                        a: a.sec as char,
                        b: b.sec as char,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> u16 {
        self.rows
    }

    pub fn cols(&self) -> u16 {
        self.cols
    }

    pub fn cell_size_m(&self) -> f64 {
        self.cell_size_m
    }

    pub fn entry(&self) -> Cell {
        self.entry
    }

    /// Entry node id; always index 0.
    pub fn entry_id(&self) -> NodeId {
        NodeId(0)
    }

    /// Number of node cells, entry included.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// All node cells; entry first, then row-major.
    pub fn nodes(&self) -> &[Cell] {
        &self.nodes
    }

    pub fn kind(&self, cell: Cell) -> CellKind {
        self.kinds[self.cell_index(cell)]
    }

    pub fn is_node(&self, cell: Cell) -> bool {
        self.in_bounds(cell) && self.kind(cell) == CellKind::Node
    }

    pub fn node_id(&self, cell: Cell) -> Option<NodeId> {
        if !self.in_bounds(cell) {
            return None;
        }
        self.node_at[self.cell_index(cell)]
    }

    pub fn cell_of(&self, node: NodeId) -> Cell {
        self.nodes[node.0]
    }

    /// Section label (ascii letter) of a node.
    pub fn section_of(&self, node: NodeId) -> u8 {
        self.sections[node.0]
    }

    /// Node cells at Manhattan distance 1 from `node` (edge-sharing).
    pub fn node_neighbors(&self, node: Cell) -> Result<Vec<Cell>, GridError> {
        if !self.is_node(node) {
            return Err(GridError::NotANode { cell: node });
        }
        Ok(self
            .adjacent(node)
            .into_iter()
            .filter(|c| self.kind(*c) == CellKind::Node)
            .collect())
    }

    /// All-pairs shortest-path distances between node cells, in meters.
    /// Movement is 4-connected through any non-blocked cell; one cell edge
    /// costs `cell_size_m`.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.nodes.len();
        let mut meters = vec![0.0f64; n * n];
        for (i, start) in self.nodes.iter().enumerate() {
            let steps = self.bfs_steps(*start);
            for (j, target) in self.nodes.iter().enumerate() {
                let s = steps[self.cell_index(*target)]
                    .expect("layout invariant: all node cells reachable");
                meters[i * n + j] = s as f64 * self.cell_size_m;
            }
        }
        DistanceMatrix { n, meters }
    }

    /// BFS step counts from `start` over traversable cells.
    fn bfs_steps(&self, start: Cell) -> Vec<Option<u32>> {
        let mut steps = vec![None; self.kinds.len()];
        steps[self.cell_index(start)] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(cell) = queue.pop_front() {
            let d = steps[self.cell_index(cell)].unwrap();
            for next in self.adjacent(cell) {
                let idx = self.cell_index(next);
                if self.kinds[idx] != CellKind::Blocked && steps[idx].is_none() {
                    steps[idx] = Some(d + 1);
                    queue.push_back(next);
                }
            }
        }
        steps
    }

    fn adjacent(&self, cell: Cell) -> Vec<Cell> {
        let mut out = Vec::with_capacity(4);
        if cell.row > 1 {
            out.push(Cell::new(cell.row - 1, cell.col));
        }
        if cell.row < self.rows {
            out.push(Cell::new(cell.row + 1, cell.col));
        }
        if cell.col > 1 {
            out.push(Cell::new(cell.row, cell.col - 1));
        }
        if cell.col < self.cols {
            out.push(Cell::new(cell.row, cell.col + 1));
        }
        out
    }

    fn in_bounds(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.row <= self.rows && cell.col >= 1 && cell.col <= self.cols
    }

    fn cell_index(&self, cell: Cell) -> usize {
        (cell.row as usize - 1) * self.cols as usize + (cell.col as usize - 1)
    }
}

/// All-pairs shortest-path lengths between node cells, entry included.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    meters: Vec<f64>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn meters(&self, a: NodeId, b: NodeId) -> f64 {
        self.meters[a.0 * self.n + b.0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_layout() -> Layout {
        Layout::parse(DEFAULT_LAYOUT).unwrap()
    }

    #[test]
    fn minimal_layout_parses() {
        let l = Layout::parse("E.").unwrap();
        assert_eq!(l.rows(), 1);
        assert_eq!(l.cols(), 2);
        assert_eq!(l.node_count(), 1);
        assert_eq!(l.entry(), Cell::new(1, 1));
    }

    #[test]
    fn default_layout_shape() {
        let l = default_layout();
        assert_eq!(l.rows(), 10);
        assert_eq!(l.cols(), 7);
        assert_eq!(l.node_count(), 35);
        assert_eq!(l.entry(), Cell::new(1, 1));
        for cell in [
            Cell::new(1, 5),
            Cell::new(3, 2),
            Cell::new(4, 4),
            Cell::new(6, 2),
            Cell::new(6, 4),
            Cell::new(8, 4),
        ] {
            assert!(l.is_node(cell), "expected node at {cell}");
        }
        let mut secs: Vec<u8> = (0..l.node_count())
            .map(|i| l.section_of(NodeId(i)))
            .collect();
        secs.sort_unstable();
        secs.dedup();
        assert_eq!(secs, (b'a'..=b'i').collect::<Vec<_>>());
    }

    #[test]
    fn parse_rejects_bad_grids() {
        assert_eq!(
            Layout::parse("Ea\nabc"),
            Err(GridError::NotRectangular { row: 2 })
        );
        assert_eq!(Layout::parse("a."), Err(GridError::NoEntry));
        assert_eq!(
            Layout::parse("EE"),
            Err(GridError::DuplicateEntry { cell: Cell::new(1, 2) })
        );
        assert_eq!(Layout::parse(""), Err(GridError::EmptyGrid));
        assert_eq!(
            Layout::parse("E?"),
            Err(GridError::UnknownChar { ch: '?', cell: Cell::new(1, 2) })
        );
    }

    #[test]
    fn parse_rejects_disconnected() {
        let err = Layout::parse("E.X.b").unwrap_err();
        assert_eq!(err, GridError::Disconnected { cell: Cell::new(1, 4) });
    }

    #[test]
    fn parse_rejects_interleaved_sections() {
        let err = Layout::parse("Eabab").unwrap_err();
        assert!(matches!(err, GridError::SectionsOverlap { .. }));
    }

    #[test]
    fn adjacent_nodes_are_5m_apart() {
        let l = Layout::parse("Ea").unwrap();
        let d = l.distance_matrix();
        assert_eq!(d.meters(NodeId(0), NodeId(1)), 5.0);
    }

    #[test]
    fn row_distance_on_default_layout() {
        let l = default_layout();
        let d = l.distance_matrix();
        let a = l.node_id(Cell::new(1, 1)).unwrap();
        let b = l.node_id(Cell::new(1, 5)).unwrap();
        assert_eq!(d.meters(a, b), 20.0);
    }

    // Independent oracle: per-pair breadth-first search keeping a parent
    // frontier list instead of the production step-grid sweep.
    fn bfs_pair_steps(l: &Layout, from: Cell, to: Cell) -> u32 {
        let mut visited = alloc::vec![false; (l.rows() as usize) * (l.cols() as usize)];
        let idx = |c: Cell| (c.row as usize - 1) * l.cols() as usize + (c.col as usize - 1);
        let mut frontier = alloc::vec![from];
        visited[idx(from)] = true;
        let mut steps = 0;
        loop {
            if frontier.iter().any(|c| *c == to) {
                return steps;
            }
            let mut next = Vec::new();
            for cell in &frontier {
                for (dr, dc) in [(-1i32, 0i32), (1, 0), (0, -1), (0, 1)] {
                    let r = cell.row as i32 + dr;
                    let c = cell.col as i32 + dc;
                    if r < 1 || r > l.rows() as i32 || c < 1 || c > l.cols() as i32 {
                        continue;
                    }
                    let cand = Cell::new(r as u16, c as u16);
                    if l.kind(cand) != CellKind::Blocked && !visited[idx(cand)] {
                        visited[idx(cand)] = true;
                        next.push(cand);
                    }
                }
            }
            assert!(!next.is_empty(), "no path from {from} to {to}");
            frontier = next;
            steps += 1;
        }
    }

    #[test]
    fn distance_matrix_matches_per_pair_bfs() {
        let l = default_layout();
        let d = l.distance_matrix();
        for i in 0..l.node_count() {
            for j in 0..l.node_count() {
                let expect =
                    bfs_pair_steps(&l, l.nodes()[i], l.nodes()[j]) as f64 * l.cell_size_m();
                assert_eq!(d.meters(NodeId(i), NodeId(j)), expect, "pair {i},{j}");
            }
        }
    }

    #[test]
    fn distance_matrix_is_a_metric() {
        let l = default_layout();
        let d = l.distance_matrix();
        let n = l.node_count();
        for i in 0..n {
            assert_eq!(d.meters(NodeId(i), NodeId(i)), 0.0);
            for j in 0..n {
                assert_eq!(d.meters(NodeId(i), NodeId(j)), d.meters(NodeId(j), NodeId(i)));
                if i != j {
                    assert!(d.meters(NodeId(i), NodeId(j)) > 0.0);
                    let steps = d.meters(NodeId(i), NodeId(j)) / l.cell_size_m();
                    assert_eq!(steps.fract(), 0.0, "distance must be a multiple of cell size");
                }
                for k in 0..n {
                    assert!(
                        d.meters(NodeId(i), NodeId(j))
                            <= d.meters(NodeId(i), NodeId(k)) + d.meters(NodeId(k), NodeId(j))
                                + 1e-9
                    );
                }
            }
        }
    }

    #[test]
    fn distances_ignore_section_labels() {
        let l = default_layout();
        let relabeled = DEFAULT_LAYOUT
            .replace('a', "z")
            .replace('b', "a")
            .replace('z', "b");
        let l2 = Layout::parse(&relabeled).unwrap();
        assert_eq!(l.distance_matrix(), l2.distance_matrix());
    }

    #[test]
    fn node_neighbors_basics() {
        // (2,2) has node neighbors at (2,3) and (3,2) only.
        let l = Layout::parse("E...\n.aa.\n.a..").unwrap();
        let n = l.node_neighbors(Cell::new(2, 2)).unwrap();
        assert_eq!(n, alloc::vec![Cell::new(3, 2), Cell::new(2, 3)]);
        // Entry at (1,1) is isolated from other nodes.
        assert!(l.node_neighbors(Cell::new(1, 1)).unwrap().is_empty());
        assert_eq!(
            l.node_neighbors(Cell::new(1, 2)),
            Err(GridError::NotANode { cell: Cell::new(1, 2) })
        );
    }

    #[test]
    fn node_neighbors_symmetric_on_default_layout() {
        let l = default_layout();
        for cell in l.nodes() {
            for nb in l.node_neighbors(*cell).unwrap() {
                assert!(l.node_neighbors(nb).unwrap().contains(cell));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let l = default_layout();
        let l2 = Layout::parse(&l.to_text()).unwrap();
        assert_eq!(l, l2);
    }
}
