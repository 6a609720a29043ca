//! Set-trie: a prefix tree over ascending keys that answers "which stored
//! sets are subsets of `q`" without scanning every set.

#[derive(Clone, Debug)]
struct Node<T> {
    /// Sorted by key.
    children: Vec<(T, usize)>,
    terminal: Option<usize>,
}

impl<T> Node<T> {
    fn new() -> Self {
        Node {
            children: Vec::new(),
            terminal: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SetTrie<T> {
    nodes: Vec<Node<T>>,
    sets: Vec<Vec<T>>,
}

impl<T: Ord + Copy> Default for SetTrie<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Ord + Copy> SetTrie<T> {
    pub fn new() -> Self {
        SetTrie {
            nodes: vec![Node::new()],
            sets: Vec::new(),
        }
    }

    /// Number of distinct stored sets.
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Stored set by id.
    pub fn get(&self, id: usize) -> &[T] {
        &self.sets[id]
    }

    /// Stores `s` and returns its id; inserting an existing set returns the
    /// existing id.
    ///
    /// Panics unless `s` is non-empty and strictly ascending.
    pub fn insert(&mut self, s: &[T]) -> usize {
        assert!(!s.is_empty(), "set-trie keys must be non-empty");
        assert!(
            s.windows(2).all(|w| w[0] < w[1]),
            "set-trie keys must be strictly ascending"
        );
        let mut node = 0;
        for &k in s {
            node = match self.nodes[node]
                .children
                .binary_search_by(|(c, _)| c.cmp(&k))
            {
                Ok(i) => self.nodes[node].children[i].1,
                Err(i) => {
                    let child = self.nodes.len();
                    self.nodes.push(Node::new());
                    self.nodes[node].children.insert(i, (k, child));
                    child
                }
            };
        }
        match self.nodes[node].terminal {
            Some(id) => id,
            None => {
                let id = self.sets.len();
                self.sets.push(s.to_vec());
                self.nodes[node].terminal = Some(id);
                id
            }
        }
    }

    pub fn contains(&self, s: &[T]) -> bool {
        let mut node = 0;
        for k in s {
            match self.nodes[node]
                .children
                .binary_search_by(|(c, _)| c.cmp(k))
            {
                Ok(i) => node = self.nodes[node].children[i].1,
                Err(_) => return false,
            }
        }
        self.nodes[node].terminal.is_some()
    }

    /// Ids of every stored set contained in the ascending query `q`,
    /// including `q` itself when stored. Ids come out in trie order.
    pub fn get_all_subsets(&self, q: &[T]) -> Vec<usize> {
        debug_assert!(q.windows(2).all(|w| w[0] < w[1]));
        let mut out = Vec::new();
        self.walk(0, q, &mut out);
        out
    }

    fn walk(&self, node: usize, q: &[T], out: &mut Vec<usize>) {
        let n = &self.nodes[node];
        if let Some(id) = n.terminal {
            out.push(id);
        }
        let (mut i, mut j) = (0, 0);
        while i < n.children.len() && j < q.len() {
            let (k, child) = n.children[i];
            match k.cmp(&q[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    self.walk(child, &q[j + 1..], out);
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

/// The inclusion-maximal members of `sets`, each ascending, sorted
/// lexicographically and duplicate-free. Input sets need not be sorted.
pub fn filter_maximal<T: Ord + Copy>(sets: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut trie = SetTrie::new();
    let mut saw_empty = false;
    for s in sets {
        let mut s = s.clone();
        s.sort_unstable();
        s.dedup();
        if s.is_empty() {
            saw_empty = true;
        } else {
            trie.insert(&s);
        }
    }
    if trie.is_empty() {
        return if saw_empty {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut ids: Vec<usize> = (0..trie.len()).collect();
    ids.sort_by_key(|&id| (std::cmp::Reverse(trie.get(id).len()), id));
    let mut removed = vec![false; trie.len()];
    for id in ids {
        if removed[id] {
            continue;
        }
        for sub in trie.get_all_subsets(trie.get(id)) {
            if sub != id {
                removed[sub] = true;
            }
        }
    }
    let mut out: Vec<Vec<T>> = (0..trie.len())
        .filter(|&id| !removed[id])
        .map(|id| trie.get(id).to_vec())
        .collect();
    out.sort();
    out
}
