//! Exact solvers on plain adjacency lists.
//!
//! Both searches are branch-and-bound with an explicit node budget: when the
//! budget runs out they return the best solution found so far and flag the
//! result as non-optimal. Adjacency lists are indexed `0..n` and must be
//! symmetric and irreflexive; conflict-graph adjacency satisfies this by
//! construction.

/// Default node budget, generous enough that every instance in the test
/// corpus finishes well inside its time target.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// Result of a chromatic-number search.
#[derive(Debug, Clone)]
pub struct ChromaticOutcome {
    pub colours: usize,
    pub assignment: Vec<usize>,
    /// True iff optimality was proven within the budget.
    pub optimal: bool,
}

/// DSATUR greedy colouring: repeatedly colour the uncoloured vertex with the
/// highest saturation (distinct neighbour colours), breaking ties by higher
/// degree and then by lowest index, always with the smallest feasible colour.
pub fn dsatur(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<Option<usize>> = vec![None; n];
    let mut neighbour_colours: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v].is_none())
            .max_by(|&a, &b| {
                saturation[a]
                    .cmp(&saturation[b])
                    .then(adj[a].len().cmp(&adj[b].len()))
                    .then(b.cmp(&a)) // lower index wins
            })
            .expect("an uncoloured vertex remains");
        let mut c = 0;
        while neighbour_colours[v].get(c).copied().unwrap_or(false) {
            c += 1;
        }
        colour[v] = Some(c);
        for &w in &adj[v] {
            if colour[w].is_none() {
                let seen = &mut neighbour_colours[w];
                if seen.len() <= c {
                    seen.resize(c + 1, false);
                }
                if !seen[c] {
                    seen[c] = true;
                    saturation[w] += 1;
                }
            }
        }
    }
    colour.into_iter().map(Option::unwrap).collect()
}

/// Greedy clique heuristic: grows a clique from each of the highest-degree
/// seeds, always adding the candidate with most neighbours among the
/// remaining candidates. Returns the largest clique found.
pub fn greedy_clique(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let nbr = bitsets(adj);
    let mut seeds: Vec<usize> = (0..n).collect();
    seeds.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
    seeds.truncate(16);

    let mut best: Vec<usize> = Vec::new();
    for &seed in &seeds {
        let mut clique = vec![seed];
        let mut cand = nbr[seed].clone();
        while let Some(u) = cand
            .iter_ones()
            .max_by_key(|&u| nbr[u].intersection_size(&cand))
        {
            clique.push(u);
            cand.intersect_with(&nbr[u]);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

enum Feasibility {
    Found(Vec<usize>),
    Infeasible,
    OutOfBudget,
}

/// Exact chromatic number by branch and bound: greedy-clique lower bound,
/// DSATUR upper seed, then repeated (k-1)-colourability searches with the
/// clique pre-coloured and the palette capped at one colour beyond the
/// largest used so far.
pub fn exact_chromatic(adj: &[Vec<usize>], budget: u64) -> ChromaticOutcome {
    let n = adj.len();
    if n == 0 {
        return ChromaticOutcome {
            colours: 0,
            assignment: Vec::new(),
            optimal: true,
        };
    }
    let clique = greedy_clique(adj);
    let lower = clique.len().max(1);
    let mut assignment = dsatur(adj);
    let mut upper = colour_count(&assignment);

    // Colour the clique first, then the rest by decreasing degree.
    let mut order = clique.clone();
    let mut in_clique = vec![false; n];
    for &v in &clique {
        in_clique[v] = true;
    }
    let mut rest: Vec<usize> = (0..n).filter(|&v| !in_clique[v]).collect();
    rest.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
    order.extend(rest);

    let mut budget = budget;
    let mut optimal = upper == lower;
    while !optimal && upper > lower {
        match search_k_colouring(adj, &order, clique.len(), upper - 1, &mut budget) {
            Feasibility::Found(found) => {
                upper = colour_count(&found);
                assignment = found;
                optimal = upper == lower;
            }
            Feasibility::Infeasible => optimal = true,
            Feasibility::OutOfBudget => break,
        }
    }
    ChromaticOutcome {
        colours: upper,
        assignment,
        optimal,
    }
}

fn colour_count(assignment: &[usize]) -> usize {
    assignment.iter().copied().max().map_or(0, |c| c + 1)
}

fn search_k_colouring(
    adj: &[Vec<usize>],
    order: &[usize],
    clique_len: usize,
    k: usize,
    budget: &mut u64,
) -> Feasibility {
    if clique_len > k {
        return Feasibility::Infeasible;
    }
    let n = adj.len();
    let mut colour: Vec<usize> = vec![usize::MAX; n];
    for (c, &v) in order[..clique_len].iter().enumerate() {
        colour[v] = c;
    }
    let start_max = clique_len.saturating_sub(1);
    match extend_colouring(adj, order, clique_len, k, start_max, &mut colour, budget) {
        Some(true) => Feasibility::Found(colour),
        Some(false) => Feasibility::Infeasible,
        None => Feasibility::OutOfBudget,
    }
}

/// Depth-first extension; `None` signals budget exhaustion.
fn extend_colouring(
    adj: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    k: usize,
    max_used: usize,
    colour: &mut [usize],
    budget: &mut u64,
) -> Option<bool> {
    if depth == order.len() {
        return Some(true);
    }
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    let v = order[depth];
    let cap = k.min(max_used + 2); // at most one fresh colour
    for c in 0..cap {
        if adj[v].iter().any(|&w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        match extend_colouring(adj, order, depth + 1, k, max_used.max(c), colour, budget) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => {
                colour[v] = usize::MAX;
                return None;
            }
        }
    }
    colour[v] = usize::MAX;
    Some(false)
}

/// Maximum independent set by branch and bound on bitsets. Returns the best
/// set found (sorted) and whether it is proven maximum.
pub fn max_independent_set(adj: &[Vec<usize>], budget: u64) -> (Vec<usize>, bool) {
    let n = adj.len();
    if n == 0 {
        return (Vec::new(), true);
    }
    let nbr = bitsets(adj);
    let mut search = MisSearch {
        nbr: &nbr,
        best: Vec::new(),
        current: Vec::new(),
        budget,
        exhausted: false,
    };
    let mut all = BitSet::empty(n);
    for v in 0..n {
        all.insert(v);
    }
    search.recurse(all);
    let mut best = search.best;
    best.sort_unstable();
    (best, !search.exhausted)
}

/// Maximal independent set, lowest ids first. A deterministic lower bound
/// for the maximum.
pub fn greedy_independent_set(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut blocked = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        if !blocked[v] {
            out.push(v);
            for &w in &adj[v] {
                blocked[w] = true;
            }
        }
    }
    out
}

struct MisSearch<'a> {
    nbr: &'a [BitSet],
    best: Vec<usize>,
    current: Vec<usize>,
    budget: u64,
    exhausted: bool,
}

impl MisSearch<'_> {
    fn recurse(&mut self, avail: BitSet) {
        if self.exhausted {
            return;
        }
        if self.budget == 0 {
            self.exhausted = true;
            return;
        }
        self.budget -= 1;
        if self.current.len() + avail.len() <= self.best.len() {
            return;
        }
        // Pivot on the available vertex with most available neighbours.
        let pivot = avail
            .iter_ones()
            .max_by_key(|&v| self.nbr[v].intersection_size(&avail));
        let Some(v) = pivot else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        };
        if self.nbr[v].intersection_size(&avail) == 0 {
            // Isolated within the remainder: always take it.
            let mut rest = avail;
            rest.remove(v);
            self.current.push(v);
            self.recurse(rest);
            self.current.pop();
            return;
        }
        // Include v.
        let mut without_nbrs = avail.clone();
        without_nbrs.remove(v);
        without_nbrs.subtract(&self.nbr[v]);
        self.current.push(v);
        self.recurse(without_nbrs);
        self.current.pop();
        // Exclude v.
        let mut rest = avail;
        rest.remove(v);
        self.recurse(rest);
    }
}

fn bitsets(adj: &[Vec<usize>]) -> Vec<BitSet> {
    let n = adj.len();
    adj.iter()
        .map(|row| {
            let mut set = BitSet::empty(n);
            for &w in row {
                set.insert(w);
            }
            set
        })
        .collect()
}

#[derive(Debug, Clone)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn empty(n: usize) -> Self {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    fn subtract(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    fn intersection_size(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(64 * i + bit)
                }
            })
        })
    }
}
