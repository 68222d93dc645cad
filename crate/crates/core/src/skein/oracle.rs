//! Reference skein evaluators.
//!
//! Brute-force recursion with no memoization, no curl reduction, and the
//! opposite crossing-selection rule from the production engines (the *last*
//! non-descending crossing in walk order is resolved first). Exponentially
//! slower, structurally independent; the test-suite cross-checks the engines
//! against these on small diagrams.

use crate::diagram::PlanarDiagram;
use crate::poly::LaurentPoly2;

/// HOMFLY polynomial by plain skein-tree expansion.
pub fn naive_homfly(d: &PlanarDiagram) -> LaurentPoly2 {
    let crossings: Vec<([u32; 4], i8)> = d.crossings().iter().map(|x| (x.arcs, x.sign)).collect();
    h_eval(&crossings, d.free_loops() as u32)
}

fn h_eval(crossings: &[([u32; 4], i8)], loops: u32) -> LaurentPoly2 {
    match h_last_bad(crossings) {
        None => {
            let comps = h_components(crossings) + loops;
            delta_h().pow(comps.saturating_sub(1))
        }
        Some(ci) => {
            let (_, sign) = crossings[ci];
            let smoothed = h_eval(&h_smooth(crossings, ci), h_smooth_loops(crossings, ci, loops));
            let switched = h_eval(&h_switch(crossings, ci), loops);
            if sign > 0 {
                &smoothed.shifted(1, 1, 1) + &switched.shifted(2, 0, 1)
            } else {
                &smoothed.shifted(-1, 1, -1) + &switched.shifted(-2, 0, 1)
            }
        }
    }
}

fn delta_h() -> LaurentPoly2 {
    LaurentPoly2::from_terms([((-1, -1), 1), ((1, -1), -1)])
}

fn delta_k() -> LaurentPoly2 {
    LaurentPoly2::from_terms([((1, -1), 1), ((-1, -1), 1), ((0, 0), -1)])
}

fn entry_slots(sign: i8) -> [u8; 2] {
    if sign > 0 {
        [0, 3]
    } else {
        [0, 1]
    }
}

fn exit_of(sign: i8, s: u8) -> u8 {
    match (sign > 0, s) {
        (_, 0) => 2,
        (true, 3) => 1,
        (false, 1) => 3,
        _ => unreachable!(),
    }
}

/// Walk order over arcs; visits record (crossing, entry slot).
fn h_visits(crossings: &[([u32; 4], i8)]) -> Vec<(usize, u8)> {
    let mut in_end: std::collections::BTreeMap<u32, (usize, u8)> = Default::default();
    for (ci, (arcs, sign)) in crossings.iter().enumerate() {
        for s in entry_slots(*sign) {
            in_end.insert(arcs[s as usize], (ci, s));
        }
    }
    let mut order = Vec::new();
    let mut seen_arc: std::collections::BTreeSet<u32> = Default::default();
    let mut seen: Vec<bool> = vec![false; crossings.len()];
    let starts: Vec<u32> = in_end.keys().copied().collect();
    for start in starts {
        if seen_arc.contains(&start) {
            continue;
        }
        let mut cur = start;
        loop {
            seen_arc.insert(cur);
            let (ci, s) = in_end[&cur];
            if !seen[ci] {
                seen[ci] = true;
                order.push((ci, s));
            }
            let out = exit_of(crossings[ci].1, s);
            cur = crossings[ci].0[out as usize];
            if cur == start {
                break;
            }
        }
    }
    order
}

fn h_last_bad(crossings: &[([u32; 4], i8)]) -> Option<usize> {
    h_visits(crossings)
        .iter()
        .rev()
        .find(|&&(_, s)| s == 0)
        .map(|&(ci, _)| ci)
}

fn h_components(crossings: &[([u32; 4], i8)]) -> u32 {
    let mut comps = 0;
    let mut seen: std::collections::BTreeSet<u32> = Default::default();
    let mut in_end: std::collections::BTreeMap<u32, (usize, u8)> = Default::default();
    for (ci, (arcs, sign)) in crossings.iter().enumerate() {
        for s in entry_slots(*sign) {
            in_end.insert(arcs[s as usize], (ci, s));
        }
    }
    let starts: Vec<u32> = in_end.keys().copied().collect();
    for start in starts {
        if seen.contains(&start) {
            continue;
        }
        comps += 1;
        let mut cur = start;
        loop {
            seen.insert(cur);
            let (ci, s) = in_end[&cur];
            let out = exit_of(crossings[ci].1, s);
            cur = crossings[ci].0[out as usize];
            if cur == start {
                break;
            }
        }
    }
    comps
}

fn h_switch(crossings: &[([u32; 4], i8)], ci: usize) -> Vec<([u32; 4], i8)> {
    let mut out = crossings.to_vec();
    let (a, sign) = out[ci];
    out[ci] = if sign > 0 {
        ([a[3], a[0], a[1], a[2]], -1)
    } else {
        ([a[1], a[2], a[3], a[0]], 1)
    };
    out
}

/// Representative map after identifying each pair of labels.
fn resolver(pairs: &[(u32, u32)]) -> std::collections::BTreeMap<u32, u32> {
    let mut map: std::collections::BTreeMap<u32, u32> = Default::default();
    fn find(map: &std::collections::BTreeMap<u32, u32>, mut x: u32) -> u32 {
        while let Some(&y) = map.get(&x) {
            if y == x {
                break;
            }
            x = y;
        }
        x
    }
    for &(u, v) in pairs {
        let (ru, rv) = (find(&map, u), find(&map, v));
        if ru != rv {
            map.insert(ru.max(rv), ru.min(rv));
        }
    }
    let keys: Vec<u32> = map.keys().copied().collect();
    let mut flat = std::collections::BTreeMap::new();
    for k in keys {
        flat.insert(k, find(&map, k));
    }
    flat
}

fn resolve(map: &std::collections::BTreeMap<u32, u32>, x: u32) -> u32 {
    map.get(&x).copied().unwrap_or(x)
}

/// Remove crossing `ci`, identifying arc labels across the given joins, and
/// report how many closed loops that produced.
fn splice<T: Copy>(
    rows: &[T],
    arcs_of: impl Fn(&T) -> [u32; 4],
    set_arcs: impl Fn(&mut T, [u32; 4]),
    ci: usize,
    pairs: [(u32, u32); 2],
) -> (Vec<T>, u32) {
    let map = resolver(&pairs);
    let mut out: Vec<T> = Vec::new();
    for (cj, item) in rows.iter().enumerate() {
        if cj != ci {
            let mut copy = *item;
            let arcs = arcs_of(item).map(|x| resolve(&map, x));
            set_arcs(&mut copy, arcs);
            out.push(copy);
        }
    }
    let mut reps: Vec<u32> = pairs
        .iter()
        .flat_map(|&(u, v)| [resolve(&map, u), resolve(&map, v)])
        .collect();
    reps.sort_unstable();
    reps.dedup();
    let mut closed = 0;
    for rep in reps {
        let used = out.iter().any(|row| arcs_of(row).contains(&rep));
        if !used {
            closed += 1;
        }
    }
    (out, closed)
}

fn h_pairs(a: [u32; 4], sign: i8) -> [(u32, u32); 2] {
    if sign > 0 {
        [(a[0], a[1]), (a[3], a[2])]
    } else {
        [(a[0], a[3]), (a[1], a[2])]
    }
}

fn h_smooth(crossings: &[([u32; 4], i8)], ci: usize) -> Vec<([u32; 4], i8)> {
    let (a, sign) = crossings[ci];
    splice(
        crossings,
        |row| row.0,
        |row, arcs| row.0 = arcs,
        ci,
        h_pairs(a, sign),
    )
    .0
}

fn h_smooth_loops(crossings: &[([u32; 4], i8)], ci: usize, loops: u32) -> u32 {
    let (a, sign) = crossings[ci];
    loops
        + splice(
            crossings,
            |row| row.0,
            |row, arcs| row.0 = arcs,
            ci,
            h_pairs(a, sign),
        )
        .1
}

/// Kauffman polynomial by plain skein-tree expansion.
pub fn naive_kauffman(d: &PlanarDiagram) -> LaurentPoly2 {
    let crossings: Vec<[u32; 4]> = d.crossings().iter().map(|x| x.arcs).collect();
    let lambda = k_eval(&crossings, d.free_loops() as u32);
    lambda.shifted(-(d.writhe() as i32), 0, 1)
}

fn k_eval(crossings: &[[u32; 4]], loops: u32) -> LaurentPoly2 {
    let visits = k_visits(crossings);
    let bad = visits
        .iter()
        .rev()
        .find(|&&(_, s, _)| s % 2 == 0)
        .map(|&(ci, _, _)| ci);
    match bad {
        None => {
            let comps = k_components(crossings) + loops;
            let writhe = k_self_writhe(crossings);
            delta_k()
                .pow(comps.saturating_sub(1))
                .shifted(writhe, 0, 1)
        }
        Some(ci) => {
            let sa = k_eval(
                &k_smooth(crossings, ci, false),
                k_smooth_loops(crossings, ci, false, loops),
            );
            let sb = k_eval(
                &k_smooth(crossings, ci, true),
                k_smooth_loops(crossings, ci, true, loops),
            );
            let sw = k_eval(&k_switch(crossings, ci), loops);
            &(&sa.shifted(0, 1, 1) + &sb.shifted(0, 1, 1)) - &sw
        }
    }
}

/// (crossing, entry slot, component id) at each first visit, in walk order.
fn k_visits(crossings: &[[u32; 4]]) -> Vec<(usize, u8, u32)> {
    let (visits, _, _) = k_walk(crossings);
    visits
}

#[allow(clippy::type_complexity)]
fn k_walk(crossings: &[[u32; 4]]) -> (Vec<(usize, u8, u32)>, Vec<Vec<(u8, u32)>>, u32) {
    let mut ends: std::collections::BTreeMap<u32, Vec<(usize, u8)>> = Default::default();
    for (ci, arcs) in crossings.iter().enumerate() {
        for (s, &a) in arcs.iter().enumerate() {
            ends.entry(a).or_default().push((ci, s as u8));
        }
    }
    let mut visits = Vec::new();
    let mut entries: Vec<Vec<(u8, u32)>> = vec![Vec::new(); crossings.len()];
    let mut seen: std::collections::BTreeSet<(usize, u8)> = Default::default();
    let mut comps = 0;
    let arcs_sorted: Vec<u32> = ends.keys().copied().collect();
    for start in arcs_sorted {
        let first = *ends[&start].iter().min().unwrap();
        if seen.contains(&first) {
            continue;
        }
        comps += 1;
        let (mut ci, mut s) = first;
        loop {
            seen.insert((ci, s));
            if entries[ci].is_empty() {
                visits.push((ci, s, comps));
            }
            entries[ci].push((s, comps));
            let out = (s + 2) % 4;
            seen.insert((ci, out));
            let arc = crossings[ci][out as usize];
            let next = ends[&arc]
                .iter()
                .copied()
                .find(|&(cj, t)| (cj, t) != (ci, out))
                .unwrap();
            ci = next.0;
            s = next.1;
            if (ci, s) == first {
                break;
            }
        }
    }
    (visits, entries, comps)
}

fn k_components(crossings: &[[u32; 4]]) -> u32 {
    k_walk(crossings).2
}

fn k_self_writhe(crossings: &[[u32; 4]]) -> i32 {
    let (_, entries, _) = k_walk(crossings);
    let mut w = 0;
    for packs in entries {
        if packs.len() == 2 && packs[0].1 == packs[1].1 {
            let (s1, s2) = (packs[0].0, packs[1].0);
            let (u, o) = if s1 % 2 == 0 { (s1, s2) } else { (s2, s1) };
            w += if (4 + o - u) % 4 == 3 { 1 } else { -1 };
        }
    }
    w
}

fn k_switch(crossings: &[[u32; 4]], ci: usize) -> Vec<[u32; 4]> {
    let mut out = crossings.to_vec();
    let a = out[ci];
    out[ci] = [a[1], a[2], a[3], a[0]];
    out
}

fn k_pairs(a: [u32; 4], other: bool) -> [(u32, u32); 2] {
    if other {
        [(a[0], a[3]), (a[1], a[2])]
    } else {
        [(a[0], a[1]), (a[2], a[3])]
    }
}

fn k_smooth(crossings: &[[u32; 4]], ci: usize, other: bool) -> Vec<[u32; 4]> {
    let a = crossings[ci];
    splice(crossings, |row| *row, |row, arcs| *row = arcs, ci, k_pairs(a, other)).0
}

fn k_smooth_loops(crossings: &[[u32; 4]], ci: usize, other: bool, loops: u32) -> u32 {
    let a = crossings[ci];
    loops + splice(crossings, |row| *row, |row, arcs| *row = arcs, ci, k_pairs(a, other)).1
}

/// Seifert circle count by direct cycle tracing (no union-find).
pub fn naive_seifert_circle_count(d: &PlanarDiagram) -> usize {
    if d.arc_count() == 0 {
        return d.free_loops();
    }
    // After smoothing, the successor of an arc within its circle is the arc
    // its head joins to: incoming under joins the outgoing over-side arc.
    let mut next: std::collections::BTreeMap<u32, u32> = Default::default();
    for x in d.crossings() {
        next.insert(x.a(), x.over_out());
        next.insert(x.over_in(), x.c());
    }
    let mut seen: std::collections::BTreeSet<u32> = Default::default();
    let mut circles = 0;
    for start in 1..=d.arc_count() as u32 {
        if seen.contains(&start) {
            continue;
        }
        circles += 1;
        let mut cur = start;
        loop {
            seen.insert(cur);
            cur = next[&cur];
            if cur == start {
                break;
            }
        }
    }
    circles + d.free_loops()
}
