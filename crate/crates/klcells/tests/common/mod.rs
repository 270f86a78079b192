#![allow(dead_code)]

use std::sync::Arc;

use klcells::{CoxeterSystem, CoxeterType, Element, KLTable, WeightFunction};

pub fn system(ty: &str) -> Arc<CoxeterSystem> {
    let ty: CoxeterType = ty.parse().unwrap();
    Arc::new(CoxeterSystem::from_type(ty).unwrap())
}

pub fn table(ty: &str, weights: &[i32]) -> KLTable {
    let sys = system(ty);
    let p = WeightFunction::new(sys.matrix(), weights.to_vec()).unwrap();
    KLTable::build(sys, p).unwrap()
}

/// One-line notation of an element of `A_{n-1} = S_n`, generator `i`
/// being the transposition of positions `i` and `i+1`.
pub fn one_line(sys: &CoxeterSystem, w: Element) -> Vec<usize> {
    let n = sys.rank() + 1;
    let mut perm: Vec<usize> = (0..n).collect();
    // w = s_a1 ... s_ak acting on positions from the right
    for &s in sys.word(w) {
        perm.swap(s as usize, s as usize + 1);
    }
    perm
}

/// Robinson–Schensted row insertion; returns (insertion, recording) tableaux.
pub fn rs(word: &[usize]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in word.iter().enumerate() {
        let mut x = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(i) => {
                    x = std::mem::replace(&mut p[row][i], x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step);
                    break;
                }
            }
        }
    }
    (p, q)
}
