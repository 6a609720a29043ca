//! Subset queries on a set-trie and maximality filtering of a QC family.

use mqce::{filter_maximal, SetTrie};

fn main() {
    let family: Vec<Vec<u32>> = vec![
        vec![1, 2, 3],
        vec![1, 2],
        vec![2, 3, 5, 8],
        vec![3, 5],
        vec![1, 2, 3],
        vec![4],
    ];

    let mut trie = SetTrie::new();
    for s in &family {
        trie.insert(s);
    }
    println!("{} distinct sets stored", trie.len());

    let query = [1, 2, 3, 5];
    let mut hits: Vec<&[u32]> = trie
        .get_all_subsets(&query)
        .into_iter()
        .map(|id| trie.get(id))
        .collect();
    hits.sort();
    println!("subsets of {query:?}: {hits:?}");

    let maximal = filter_maximal(&family);
    println!("maximal: {maximal:?}");
    assert_eq!(filter_maximal(&maximal), maximal);
}
