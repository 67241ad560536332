//! Probe: which (H, K) pairing of PSL2(11) and M11 classes in M12
//! gives derangement containment?

fn main() {
    let m12 = groupio::registry_lookup("M12").unwrap();
    let (psl_gens, _) = groupio::load_generators("m12_psl2_11.grp").unwrap();
    let psl = permcore::Subgroup::from_perms(&m12, &psl_gens).unwrap();
    println!("psl order {}", psl.order());
    // is the seed maximal? try extending by single elements
    let gens = psl.small_generating_set(&m12);
    let mut extension: Option<permcore::Subgroup> = None;
    for g in 0..m12.order() as u32 {
        if psl.contains_idx(g) {
            continue;
        }
        let mut ext = gens.clone();
        ext.push(g);
        if let Some(c) = permcore::Subgroup::closure_bounded(&m12, &ext, 50_000) {
            if c.order() < 95040 {
                println!("seed extends to order {}", c.order());
                extension = Some(c);
                break;
            }
        }
    }
    if extension.is_none() {
        println!("seed is maximal");
    }
    // the point stabilizer class
    let m11b = permcore::point_stabilizer(&m12, 0);
    println!("m11b order {} transitive {}", m11b.order(), {
        let g11 = m11b.to_group(&m12);
        g11.is_transitive()
    });
    // containment checks in all pairings
    let dc = |h: &permcore::Subgroup, k: &permcore::Subgroup| {
        fixerlab::derangement_containment(&m12, h, k)
    };
    println!("D(psl) in D(m11b): {}", dc(&psl, &m11b));
    println!("D(m11b) in D(psl): {}", dc(&m11b, &psl));
    if let Some(m11a) = &extension {
        let ga = m11a.to_group(&m12);
        println!(
            "m11a order {} transitive {} spectrum {:?}",
            m11a.order(),
            ga.is_transitive(),
            ga.spectrum()
        );
        println!("D(psl) in D(m11a): {}", dc(&psl, m11a));
        println!("D(m11a) in D(psl): {}", dc(m11a, &psl));
    }
}
