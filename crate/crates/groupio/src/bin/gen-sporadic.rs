//! Regenerates the shipped sporadic-group fixtures in data/.
//!
//! Everything is constructed from first principles and verified before
//! being written:
//!
//! - the binary Golay code arises as the length-23 quadratic-residue
//!   cyclic code (an explicit degree-11 divisor of x^23 - 1 over
//!   GF(2)), extended by a parity bit; its 759 weight-8 words form the
//!   Steiner system S(5,8,24), checked directly;
//! - the five-transitive groups on 24/23/22 points are automorphism
//!   groups of that design: generators beyond the visible PSL2(23)
//!   part are found by a backtracking search over design
//!   automorphisms with pinned points, and closures are checked
//!   against the known orders;
//! - the 12-point Steiner system S(5,6,12) comes from the
//!   quadratic-residue hexad orbit under PSL2(11), with the same
//!   machinery on top;
//! - the smallest Janko group is generated by the classical pair of
//!   7x7 matrices over GF(11) (orders 7 and 5 with product of order
//!   19); the group is enumerated as matrices and its 266-point action
//!   realized on the cosets of a PSL2(11) subgroup found inside;
//! - the maximal subgroups needed by the derangement tables are cut
//!   out as stabilizers, centralizers and normalizers, each order-
//!   checked.
//!
//! Usage: cargo run --release -p groupio --bin gen-sporadic

use permcore::{
    centralizer, normalizer, point_stabilizer, setwise_stabilizer, Perm, PermGroup, Subgroup,
};
use std::collections::{HashMap, HashSet};
use std::path::Path;

fn main() {
    let data_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    std::fs::create_dir_all(&data_dir).unwrap();

    // ---------- the 12-point world ----------
    eprintln!("building S(5,6,12) and the 12/11-point groups");
    let (m12, m12_seed_psl) = build_m12();
    write_group(&data_dir, "m12.grp", "M12", &m12);
    write_subgroup(&data_dir, "m12_psl2_11.grp", "PSL(2,11) < M12", &m12, &m12_seed_psl);
    let m11 = m11_from_m12(&m12);
    write_group(&data_dir, "m11.grp", "M11", &m11);

    // ---------- the 24-point world ----------
    eprintln!("building the Golay octads");
    let octads = golay_octads();
    eprintln!("building the 22/23-point groups");
    let m22_world = build_m22(&octads);
    write_group(&data_dir, "m22.grp", "M22", &m22_world.group);
    write_subgroup(&data_dir, "m22_duad.grp", "2^4:S5 < M22", &m22_world.group, &m22_world.duad);
    write_subgroup(&data_dir, "m22_hexad.grp", "2^4:A6 < M22", &m22_world.group, &m22_world.hexad);
    write_subgroup(&data_dir, "m22_a7_left.grp", "A7 < M22 (first class)", &m22_world.group, &m22_world.a7_left);
    write_subgroup(&data_dir, "m22_a7_right.grp", "A7 < M22 (second class)", &m22_world.group, &m22_world.a7_right);

    let m23_world = build_m23(&octads);
    write_group(&data_dir, "m23.grp", "M23", &m23_world.group);
    write_subgroup(&data_dir, "m23_duad.grp", "PSigmaL(3,4)-type duad stabilizer < M23", &m23_world.group, &m23_world.duad);
    write_subgroup(&data_dir, "m23_heptad.grp", "2^4:A7 heptad stabilizer < M23", &m23_world.group, &m23_world.heptad);

    // ---------- the Janko group ----------
    eprintln!("building the Janko group on 266 points");
    let j1 = build_j1();
    write_group(&data_dir, "j1.grp", "J1", &j1.group);
    write_subgroup(&data_dir, "j1_2xa5.grp", "2xA5 < J1", &j1.group, &j1.invol_centralizer);
    write_subgroup(&data_dir, "j1_d6xd10.grp", "D6xD10 < J1", &j1.group, &j1.d6xd10);
    write_subgroup(&data_dir, "j1_7_6.grp", "7:6 < J1", &j1.group, &j1.f42);
    write_subgroup(&data_dir, "j1_2_3_7_3.grp", "2^3:7:3 < J1", &j1.group, &j1.sylow2_normalizer);
    write_subgroup(&data_dir, "j1_11_10.grp", "11:10 < J1", &j1.group, &j1.f110);
    eprintln!("done");
}

fn write_group(dir: &Path, file: &str, name: &str, g: &PermGroup) {
    // a small generating set keeps files readable
    let whole = Subgroup::whole(g);
    let gens: Vec<Perm> = whole
        .small_generating_set(g)
        .iter()
        .map(|&i| g.element(i))
        .collect();
    let text = render(g.degree(), name, g.order(), &gens);
    std::fs::write(dir.join(file), text).unwrap();
    eprintln!("  wrote {file}: degree {} order {}", g.degree(), g.order());
}

fn write_subgroup(dir: &Path, file: &str, name: &str, parent: &PermGroup, s: &Subgroup) {
    let gens: Vec<Perm> = s
        .small_generating_set(parent)
        .iter()
        .map(|&i| parent.element(i))
        .collect();
    let text = render(parent.degree(), name, s.order(), &gens);
    std::fs::write(dir.join(file), text).unwrap();
    eprintln!("  wrote {file}: order {}", s.order());
}

fn render(degree: usize, name: &str, order: u64, gens: &[Perm]) -> String {
    let mut out = String::new();
    out.push_str(&format!("degree {degree}\n"));
    out.push_str(&format!("name {name}\n"));
    out.push_str(&format!("order {order}\n"));
    for g in gens {
        let row: Vec<String> = g.images().iter().map(|&i| (i + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------- designs

/// Backtracking search for automorphisms of a block design with
/// lambda(5-set) <= 1 (so five mapped points of a block force its
/// image block).
struct DesignSearch {
    n: usize,
    blocks: Vec<u32>,
    block_set: HashSet<u32>,
    point_blocks: Vec<Vec<usize>>,
    order: Vec<u16>,
}

impl DesignSearch {
    fn new(n: usize, blocks: Vec<u32>, pins: &[(u16, u16)]) -> DesignSearch {
        let block_set: HashSet<u32> = blocks.iter().copied().collect();
        let mut point_blocks = vec![Vec::new(); n];
        for (bi, &b) in blocks.iter().enumerate() {
            for p in 0..n {
                if b >> p & 1 == 1 {
                    point_blocks[p].push(bi);
                }
            }
        }
        // assignment order: pinned points first, then greedily the point
        // lying in the most blocks that are nearly covered already
        let mut order: Vec<u16> = pins.iter().map(|&(p, _)| p).collect();
        let mut chosen = vec![false; n];
        for &(p, _) in pins {
            chosen[p as usize] = true;
        }
        while order.len() < n {
            let mut best = (0i64, u16::MAX);
            for p in 0..n as u16 {
                if chosen[p as usize] {
                    continue;
                }
                let mut score = 0i64;
                for &bi in &point_blocks[p as usize] {
                    let covered = (0..n)
                        .filter(|&q| chosen[q] && blocks[bi] >> q & 1 == 1)
                        .count();
                    score += (covered as i64).pow(2);
                }
                if best.1 == u16::MAX || score > best.0 {
                    best = (score, p);
                }
            }
            chosen[best.1 as usize] = true;
            order.push(best.1);
        }
        DesignSearch {
            n,
            blocks,
            block_set,
            point_blocks,
            order,
        }
    }

    /// Collect up to `limit` design automorphisms extending the pins,
    /// in DFS order.
    fn automorphisms(&self, pins: &[(u16, u16)], limit: usize) -> Vec<Perm> {
        let mut img = vec![u16::MAX; self.n];
        let mut used = vec![false; self.n];
        let mut found = Vec::new();
        for &(p, q) in pins {
            img[p as usize] = q;
            used[q as usize] = true;
        }
        self.dfs(pins.len(), &mut img, &mut used, &mut found, limit);
        found
    }

    fn dfs(
        &self,
        depth: usize,
        img: &mut Vec<u16>,
        used: &mut Vec<bool>,
        found: &mut Vec<Perm>,
        limit: usize,
    ) {
        if found.len() >= limit {
            return;
        }
        if depth == self.n {
            found.push(Perm::from_images(img.clone()).unwrap());
            return;
        }
        let p = self.order[depth] as usize;
        for c in 0..self.n as u16 {
            if used[c as usize] {
                continue;
            }
            img[p] = c;
            used[c as usize] = true;
            if self.consistent(p, img) {
                self.dfs(depth + 1, img, used, found, limit);
            }
            img[p] = u16::MAX;
            used[c as usize] = false;
            if found.len() >= limit {
                return;
            }
        }
    }

    fn consistent(&self, p: usize, img: &[u16]) -> bool {
        'blocks: for &bi in &self.point_blocks[p] {
            let b = self.blocks[bi];
            let mut image_mask = 0u32;
            let mut assigned = 0;
            for q in 0..self.n {
                if b >> q & 1 == 1 {
                    if img[q] != u16::MAX {
                        image_mask |= 1 << img[q];
                        assigned += 1;
                    }
                }
            }
            if assigned < 5 {
                continue;
            }
            if assigned == self.n.min(b.count_ones() as usize) && self.block_set.contains(&image_mask)
            {
                continue;
            }
            // the image must extend to a block: scan blocks through the
            // least image point
            let low = image_mask.trailing_zeros() as usize;
            for &cj in &self.point_blocks[low] {
                if self.blocks[cj] & image_mask == image_mask {
                    continue 'blocks;
                }
            }
            return false;
        }
        true
    }
}

// ------------------------------------------------------------- 12 points

/// PSL2(11) acting on the projective line {0..10, inf = 11}.
fn psl2_11_gens() -> Vec<Perm> {
    let p = 11u16;
    let n = 12usize;
    let inf = 11u16;
    let mut shift = vec![0u16; n];
    for x in 0..p {
        shift[x as usize] = (x + 1) % p;
    }
    shift[inf as usize] = inf;
    let inv = |a: u16| -> u16 { (1..p).find(|&b| (a as u32 * b as u32) % p as u32 == 1).unwrap() };
    let mut neg_inv = vec![0u16; n];
    neg_inv[0] = inf;
    neg_inv[inf as usize] = 0;
    for x in 1..p {
        neg_inv[x as usize] = (p - inv(x)) % p;
    }
    vec![
        Perm::from_images(shift).unwrap(),
        Perm::from_images(neg_inv).unwrap(),
    ]
}

fn build_m12() -> (PermGroup, Subgroup) {
    let gens = psl2_11_gens();
    let psl = PermGroup::from_generators(12, gens.clone(), 1_000).unwrap();
    assert_eq!(psl.order(), 660);
    // hexads: orbit of the quadratic-residue hexad {inf,1,3,4,5,9}
    let base: u32 = [11u16, 1, 3, 4, 5, 9].iter().map(|&p| 1u32 << p).sum();
    let mut hexads: HashSet<u32> = HashSet::new();
    let mut frontier = vec![base];
    hexads.insert(base);
    while let Some(h) = frontier.pop() {
        for g in &gens {
            let img = apply_mask(h, g);
            if hexads.insert(img) {
                frontier.push(img);
            }
        }
    }
    assert_eq!(hexads.len(), 132, "the hexad orbit is the Steiner system");
    let blocks: Vec<u32> = {
        let mut v: Vec<u32> = hexads.iter().copied().collect();
        v.sort_unstable();
        v
    };
    verify_steiner(12, 5, &blocks);
    // one extra automorphism beyond the sharply 3-transitive seed
    let search = DesignSearch::new(12, blocks, &[(11, 11), (0, 0), (1, 1)]);
    let autos = search.automorphisms(&[(11, 11), (0, 0), (1, 1)], 3);
    let extra: Vec<Perm> = autos.into_iter().filter(|a| !a.is_identity()).collect();
    assert!(!extra.is_empty(), "M12 has nontrivial 3-point stabilizer");
    let mut m12_gens = gens.clone();
    m12_gens.extend(extra);
    let m12 = PermGroup::from_generators(12, m12_gens, 200_000).unwrap();
    assert_eq!(m12.order(), 95040);
    let seed = Subgroup::from_perms(&m12, &gens).unwrap();
    assert_eq!(seed.order(), 660);
    (m12, seed)
}

fn m11_from_m12(m12: &PermGroup) -> PermGroup {
    let stab = point_stabilizer(m12, 11);
    assert_eq!(stab.order(), 7920);
    let kept: Vec<u16> = (0..11).collect();
    let perms: Vec<Perm> = stab
        .indices
        .iter()
        .map(|&i| m12.element(i).restrict(&kept).unwrap())
        .collect();
    let m11 = PermGroup::from_perms(11, perms).unwrap();
    assert_eq!(m11.order(), 7920);
    m11
}

fn apply_mask(mask: u32, g: &Perm) -> u32 {
    let mut out = 0u32;
    for p in 0..g.degree() as u16 {
        if mask >> p & 1 == 1 {
            out |= 1 << g.apply(p);
        }
    }
    out
}

fn verify_steiner(n: usize, t: usize, blocks: &[u32]) {
    // every t-subset lies in exactly one block
    let mut subset = vec![0u16; t];
    fn rec(
        n: usize,
        t: usize,
        start: usize,
        depth: usize,
        subset: &mut Vec<u16>,
        blocks: &[u32],
    ) {
        if depth == t {
            let mask: u32 = subset.iter().map(|&p| 1u32 << p).sum();
            let count = blocks.iter().filter(|&&b| b & mask == mask).count();
            assert_eq!(count, 1, "t-subset {subset:?} lies in {count} blocks");
            return;
        }
        for p in start..n {
            subset[depth] = p as u16;
            rec(n, t, p + 1, depth + 1, subset, blocks);
        }
    }
    rec(n, t, 0, 0, &mut subset, blocks);
}

// ------------------------------------------------------------- 24 points

/// The 759 octads of S(5,8,24) on points {0..22, inf = 23}, from the
/// extended binary quadratic-residue code of length 24.
fn golay_octads() -> Vec<u32> {
    // find the lexicographically least degree-11 divisor of x^23 + 1
    // over GF(2); its cyclic code is the [23,12,7] Golay code
    let x23_plus_1: u32 = (1 << 23) | 1;
    let gen_poly = (1u32 << 11..1 << 12)
        .find(|&g| poly2_divides(g, x23_plus_1))
        .expect("degree-11 factor exists");
    // span the 12 cyclic shifts g, xg, ..., x^11 g (all degree < 23)
    let basis: Vec<u32> = (0..12).map(|s| gen_poly << s).collect();
    let mut words: Vec<u32> = Vec::with_capacity(4096);
    for sel in 0u32..4096 {
        let mut w = 0u32;
        for (b, basis_word) in basis.iter().enumerate() {
            if sel >> b & 1 == 1 {
                w ^= basis_word;
            }
        }
        words.push(w);
    }
    // extend by overall parity on bit 23
    let octads: Vec<u32> = words
        .iter()
        .map(|&w| {
            let parity = (w.count_ones() % 2) as u32;
            w | parity << 23
        })
        .filter(|w| w.count_ones() == 8)
        .collect();
    assert_eq!(octads.len(), 759, "octad count of the Golay code");
    verify_steiner_sampled(24, 5, &octads);
    // invariance under PSL2(23)
    for g in psl2_23_gens() {
        for &o in &octads {
            let img = apply_mask(o, &g);
            assert!(octads.contains(&img), "octads are PSL2(23)-invariant");
        }
    }
    let mut sorted = octads;
    sorted.sort_unstable();
    sorted
}

fn verify_steiner_sampled(n: usize, t: usize, blocks: &[u32]) {
    // the full check over C(24,5) subsets is affordable once
    verify_steiner(n, t, blocks);
}

fn poly2_divides(divisor: u32, target: u32) -> bool {
    let mut rem = target;
    let dd = 31 - divisor.leading_zeros();
    while rem != 0 {
        let rd = 31 - rem.leading_zeros();
        if rd < dd {
            return false;
        }
        rem ^= divisor << (rd - dd);
    }
    true
}

/// PSL2(23) on {0..22, inf = 23}.
fn psl2_23_gens() -> Vec<Perm> {
    let p = 23u16;
    let n = 24usize;
    let inf = 23u16;
    let mut shift = vec![0u16; n];
    for x in 0..p {
        shift[x as usize] = (x + 1) % p;
    }
    shift[inf as usize] = inf;
    let inv = |a: u16| -> u16 { (1..p).find(|&b| (a as u32 * b as u32) % p as u32 == 1).unwrap() };
    let mut neg_inv = vec![0u16; n];
    neg_inv[0] = inf;
    neg_inv[inf as usize] = 0;
    for x in 1..p {
        neg_inv[x as usize] = (p - inv(x)) % p;
    }
    vec![
        Perm::from_images(shift).unwrap(),
        Perm::from_images(neg_inv).unwrap(),
    ]
}

/// The Borel subgroup of PSL2(23) fixing inf: x -> 4x + b.
fn borel_23_gens() -> Vec<Perm> {
    let p = 23u16;
    let n = 24usize;
    let inf = 23u16;
    let mut shift = vec![0u16; n];
    for x in 0..p {
        shift[x as usize] = (x + 1) % p;
    }
    shift[inf as usize] = inf;
    let mut mul4 = vec![0u16; n];
    for x in 0..p {
        mul4[x as usize] = (x * 4) % p;
    }
    mul4[inf as usize] = inf;
    vec![
        Perm::from_images(shift).unwrap(),
        Perm::from_images(mul4).unwrap(),
    ]
}

struct M23World {
    group: PermGroup,
    duad: Subgroup,
    heptad: Subgroup,
}

fn build_m23(octads: &[u32]) -> M23World {
    // seed: the Borel 23:11 fixes inf; one design automorphism with
    // (inf, 0 fixed; 1 -> 5) lies outside it (5 is a non-residue)
    let pins = [(23u16, 23u16), (0, 0), (1, 5)];
    let search = DesignSearch::new(24, octads.to_vec(), &pins);
    let autos = search.automorphisms(&pins, 1);
    assert!(!autos.is_empty(), "M23 is 4-transitive");
    let mut gens23: Vec<Perm> = borel_23_gens();
    gens23.extend(autos);
    // restrict to the 23 points other than inf
    let kept: Vec<u16> = (0..23).collect();
    let gens: Vec<Perm> = gens23.iter().map(|g| g.restrict(&kept).unwrap()).collect();
    let group = PermGroup::from_generators(23, gens, 11_000_000).unwrap();
    assert_eq!(group.order(), 10_200_960);
    // duad stabilizer {0, 1}: PSigmaL(3,4)-type, order 40320
    let duad = setwise_stabilizer(&group, &[0, 1]);
    assert_eq!(duad.order(), 40_320);
    // heptad stabilizer: a block of S(4,7,23), i.e. an octad through inf
    let oct = octads
        .iter()
        .find(|&&o| o >> 23 & 1 == 1)
        .expect("some octad contains inf");
    let heptad_pts: Vec<u16> = (0..23).filter(|&p| oct >> p & 1 == 1).collect();
    assert_eq!(heptad_pts.len(), 7);
    let heptad = setwise_stabilizer(&group, &heptad_pts);
    assert_eq!(heptad.order(), 40_320);
    M23World {
        group,
        duad,
        heptad,
    }
}

struct M22World {
    group: PermGroup,
    duad: Subgroup,
    hexad: Subgroup,
    a7_left: Subgroup,
    a7_right: Subgroup,
}

fn build_m22(octads: &[u32]) -> M22World {
    // pointwise stabilizer of {inf, 0}: seed with the torus x -> 4x,
    // and collect design automorphisms fixing both points
    let pins = [(23u16, 23u16), (0, 0)];
    let search = DesignSearch::new(24, octads.to_vec(), &pins);
    let autos = search.automorphisms(&pins, 12);
    let p = 23u16;
    let n24 = 24usize;
    let mut mul4 = vec![0u16; n24];
    for x in 0..p {
        mul4[x as usize] = (x * 4) % p;
    }
    mul4[23] = 23;
    let mut gens24 = vec![Perm::from_images(mul4).unwrap()];
    gens24.extend(autos);
    // relabel onto the 22 points 1..22
    let kept: Vec<u16> = (1..23).collect();
    let gens: Vec<Perm> = gens24.iter().map(|g| g.restrict(&kept).unwrap()).collect();
    let group = PermGroup::from_generators(22, gens, 1_000_000).unwrap();
    assert_eq!(group.order(), 443_520);
    let relabel = |orig: u16| -> u16 { orig - 1 };
    // duad stabilizer (a pair of the 22 points): 2^4:S5, order 1920
    let duad = setwise_stabilizer(&group, &[relabel(1), relabel(2)]);
    assert_eq!(duad.order(), 1920);
    // hexad stabilizer: an octad through both deleted points gives a
    // block of S(3,6,22): 2^4:A6, order 5760
    let oct_hexad = octads
        .iter()
        .find(|&&o| o >> 23 & 1 == 1 && o & 1 == 1)
        .expect("octad through both deleted points");
    let hexad_pts: Vec<u16> = (1..23).filter(|&q| oct_hexad >> q & 1 == 1).map(relabel).collect();
    assert_eq!(hexad_pts.len(), 6);
    let hexad = setwise_stabilizer(&group, &hexad_pts);
    assert_eq!(hexad.order(), 5760);
    // the two heptad stabilizers A7: octads through exactly one of the
    // deleted points
    let oct_left = octads
        .iter()
        .find(|&&o| o >> 23 & 1 == 1 && o & 1 == 0)
        .expect("octad through inf only");
    let left_pts: Vec<u16> = (1..23).filter(|&q| oct_left >> q & 1 == 1).map(relabel).collect();
    assert_eq!(left_pts.len(), 7);
    let a7_left = setwise_stabilizer(&group, &left_pts);
    assert_eq!(a7_left.order(), 2520);
    let oct_right = octads
        .iter()
        .find(|&&o| o >> 23 & 1 == 0 && o & 1 == 1)
        .expect("octad through 0 only");
    let right_pts: Vec<u16> = (1..23).filter(|&q| oct_right >> q & 1 == 1).map(relabel).collect();
    assert_eq!(right_pts.len(), 7);
    let a7_right = setwise_stabilizer(&group, &right_pts);
    assert_eq!(a7_right.order(), 2520);
    M22World {
        group,
        duad,
        hexad,
        a7_left,
        a7_right,
    }
}

// ------------------------------------------------------------ the Janko group

type Mat = [u8; 49];

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut out = [0u8; 49];
    for i in 0..7 {
        for j in 0..7 {
            let mut acc = 0u32;
            for k in 0..7 {
                acc += a[i * 7 + k] as u32 * b[k * 7 + j] as u32;
            }
            out[i * 7 + j] = (acc % 11) as u8;
        }
    }
    out
}

fn mat_identity() -> Mat {
    let mut m = [0u8; 49];
    for i in 0..7 {
        m[i * 7 + i] = 1;
    }
    m
}

fn mat_order(m: &Mat, cap: u32) -> u32 {
    let id = mat_identity();
    let mut cur = *m;
    let mut n = 1;
    while cur != id {
        cur = mat_mul(&cur, m);
        n += 1;
        assert!(n <= cap, "element order exceeded cap");
    }
    n
}

struct J1World {
    group: PermGroup,
    invol_centralizer: Subgroup,
    d6xd10: Subgroup,
    f42: Subgroup,
    f110: Subgroup,
    sylow2_normalizer: Subgroup,
}

fn build_j1() -> J1World {
    // the classical generating pair over GF(11): the basis 7-cycle and
    // an order-5 matrix; their product has order 19
    let mut y = [0u8; 49];
    for i in 0..7 {
        y[((i + 1) % 7) * 7 + i] = 1;
    }
    let zi: [[i32; 7]; 7] = [
        [-3, 2, -1, -1, -3, -1, -3],
        [-2, 1, 1, 3, 1, 3, 3],
        [-1, -1, -3, -1, -3, -3, 2],
        [-1, -3, -1, -3, -3, 2, -1],
        [-3, -1, -3, -3, 2, -1, -1],
        [1, 3, 3, -2, 1, 1, 3],
        [3, 3, -2, 1, 1, 3, 1],
    ];
    let mut z = [0u8; 49];
    for i in 0..7 {
        for j in 0..7 {
            z[i * 7 + j] = zi[i][j].rem_euclid(11) as u8;
        }
    }
    assert_eq!(mat_order(&y, 10), 7);
    assert_eq!(mat_order(&z, 10), 5);
    assert_eq!(mat_order(&mat_mul(&y, &z), 25), 19);

    // enumerate the matrix group
    eprintln!("  enumerating the matrix group");
    let mut elements: HashSet<Mat> = HashSet::new();
    elements.insert(mat_identity());
    let mut frontier = vec![mat_identity()];
    while let Some(m) = frontier.pop() {
        for g in [&y, &z] {
            let nm = mat_mul(&m, g);
            if elements.insert(nm) {
                frontier.push(nm);
            }
        }
    }
    assert_eq!(elements.len(), 175_560);
    let mut sorted: Vec<Mat> = elements.iter().copied().collect();
    sorted.sort_unstable();

    // find a PSL2(11) subgroup: an order-11 element plus an involution
    eprintln!("  locating a PSL2(11) subgroup");
    let x11 = sorted
        .iter()
        .find(|m| mat_order(m, 20) == 11)
        .copied()
        .expect("order-11 element");
    let mut psl: Option<Vec<Mat>> = None;
    for cand in &sorted {
        if mat_order(cand, 20) != 2 {
            continue;
        }
        if let Some(sub) = matrix_closure(&[x11, *cand], 661) {
            if sub.len() == 660 {
                psl = Some(sub);
                break;
            }
        }
    }
    let psl = psl.expect("PSL2(11) found");

    // the 266-point action on the cosets of PSL2(11)
    eprintln!("  building the 266-point coset action");
    let psl_set: HashSet<Mat> = psl.iter().copied().collect();
    let coset_min = |g: &Mat| -> Mat {
        psl.iter().map(|l| mat_mul(l, g)).min().unwrap()
    };
    let mut reps: Vec<Mat> = vec![coset_min(&mat_identity())];
    let mut index: HashMap<Mat, usize> = HashMap::new();
    index.insert(reps[0], 0);
    let mut images: Vec<Vec<u16>> = vec![Vec::new(), Vec::new()];
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head];
        for (gi, g) in [&y, &z].into_iter().enumerate() {
            let t = coset_min(&mat_mul(&r, g));
            let ti = *index.entry(t).or_insert_with(|| {
                reps.push(t);
                reps.len() - 1
            });
            images[gi].push(ti as u16);
        }
        head += 1;
    }
    assert_eq!(reps.len(), 266);
    let _ = psl_set;
    let perm_y = Perm::from_images(images[0].clone()).unwrap();
    let perm_z = Perm::from_images(images[1].clone()).unwrap();
    let group = PermGroup::from_generators(266, vec![perm_y, perm_z], 200_000).unwrap();
    assert_eq!(group.order(), 175_560);
    let spectrum: Vec<u64> = group.spectrum().into_iter().collect();
    assert_eq!(spectrum, vec![1, 2, 3, 5, 6, 7, 10, 11, 15, 19]);

    // companions
    eprintln!("  cutting out the named subgroups");
    let z_idx = (0..group.order() as u32)
        .find(|&i| group.order_of_idx(i) == 2)
        .unwrap();
    let invol_centralizer = centralizer(&group, z_idx);
    assert_eq!(invol_centralizer.order(), 120); // 2 x A5
    let c3 = (0..group.order() as u32)
        .find(|&i| group.order_of_idx(i) == 3)
        .unwrap();
    let d6xd10 = normalizer(&group, &Subgroup::closure(&group, &[c3]));
    assert_eq!(d6xd10.order(), 60);
    let c7 = (0..group.order() as u32)
        .find(|&i| group.order_of_idx(i) == 7)
        .unwrap();
    let f42 = normalizer(&group, &Subgroup::closure(&group, &[c7]));
    assert_eq!(f42.order(), 42);
    let c11 = (0..group.order() as u32)
        .find(|&i| group.order_of_idx(i) == 11)
        .unwrap();
    let f110 = normalizer(&group, &Subgroup::closure(&group, &[c11]));
    assert_eq!(f110.order(), 110);
    // a Sylow 2-subgroup: the elementary abelian 2^3 inside C(z)
    let cz = &invol_centralizer;
    let mut e8 = None;
    'outer: for &a in &cz.indices {
        if group.order_of_idx(a) != 2 || a == z_idx {
            continue;
        }
        for &b in &cz.indices {
            if group.order_of_idx(b) != 2 || b == a || b == z_idx {
                continue;
            }
            let sub = Subgroup::closure(&group, &[z_idx, a, b]);
            if sub.order() == 8 && sub.spectrum(&group).iter().max() == Some(&2) {
                e8 = Some(sub);
                break 'outer;
            }
        }
    }
    let e8 = e8.expect("Sylow 2-subgroup of order 8");
    let sylow2_normalizer = normalizer(&group, &e8);
    assert_eq!(sylow2_normalizer.order(), 168); // 2^3:7:3
    J1World {
        group,
        invol_centralizer,
        d6xd10,
        f42,
        f110,
        sylow2_normalizer,
    }
}

fn matrix_closure(gens: &[Mat], cap: usize) -> Option<Vec<Mat>> {
    let mut set: HashSet<Mat> = HashSet::new();
    set.insert(mat_identity());
    let mut frontier = vec![mat_identity()];
    while let Some(m) = frontier.pop() {
        for g in gens {
            let nm = mat_mul(&m, g);
            if set.insert(nm) {
                if set.len() > cap {
                    return None;
                }
                frontier.push(nm);
            }
        }
    }
    Some(set.into_iter().collect())
}
