use toric_graph::algebra::{graver_oracle_for_graph, OracleBudget};
use toric_graph::enumerate::{enumerate_graver, EnumConfig};
use toric_graph::families::{bowtie, complete_graph, cycle_graph, family_full_walk, family_graph, family_mixed_walk};
use toric_graph::{
    analyze, binomial_of_walk, classify_circuit, in_ugb_structural, is_mixed, is_primitive, parse_graph,
    pure_block_certificate, witness_order, Binomial, CircuitKind, Error, Graph,
};

/// Vertex degrees of a monomial, straight from the edge list.
fn vertex_degrees(g: &Graph, exps: &[u32]) -> Vec<u64> {
    let mut d = vec![0u64; g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        d[u] += exps[e] as u64;
        d[v] += exps[e] as u64;
    }
    d
}

fn balanced(g: &Graph, b: &Binomial) -> bool {
    vertex_degrees(g, b.plus()) == vertex_degrees(g, b.minus())
}

fn dot(row: &[u64], v: &[i64]) -> i128 {
    row.iter().zip(v).map(|(&w, &x)| w as i128 * x as i128).sum()
}

fn two_triangles_and_path() -> (Graph, Vec<usize>) {
    let g = parse_graph("0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 6\n6 4").unwrap();
    (g, vec![2, 0, 1, 3, 4, 5, 6, 7, 4, 3])
}

#[test]
fn walk_examples() {
    let c4 = cycle_graph(4).unwrap();
    let b = binomial_of_walk(&c4, &[0, 1, 2, 3]).unwrap();
    assert_eq!(b.plus(), [1, 0, 1, 0]);
    assert_eq!(b.minus(), [0, 1, 0, 1]);
    assert_eq!(b.degree(), 2);

    let bt = bowtie();
    let b = binomial_of_walk(&bt, &[0, 1, 2, 3, 4, 5]).unwrap();
    assert_eq!(b.degree(), 3);
    assert!(b.plus().iter().chain(b.minus()).all(|&x| x <= 1));
    assert!(balanced(&bt, &b));

    assert!(matches!(binomial_of_walk(&c4, &[0, 1, 1, 0]), Err(Error::Reducible(_))));
    assert!(matches!(binomial_of_walk(&c4, &[0, 1, 2]), Err(Error::OddWalk(3))));
    assert!(matches!(binomial_of_walk(&c4, &[0, 2]), Err(Error::NotIncident(..))));
}

#[test]
fn canonical_sign_is_idempotent() {
    let c4 = cycle_graph(4).unwrap();
    let fwd = binomial_of_walk(&c4, &[0, 1, 2, 3]).unwrap();
    let back = binomial_of_walk(&c4, &[1, 2, 3, 0]).unwrap();
    assert_eq!(fwd, back);
    assert!(fwd.is_canonical());
    assert_eq!(fwd.clone().canonical(), fwd);
    let flipped = Binomial::new(&c4, vec![0, 1, 0, 1], vec![1, 0, 1, 0]).unwrap();
    assert_eq!(flipped.canonical(), fwd);
}

#[test]
fn circuit_kinds() {
    let c4 = cycle_graph(4).unwrap();
    let b = binomial_of_walk(&c4, &[0, 1, 2, 3]).unwrap();
    assert_eq!(classify_circuit(&c4, &b), CircuitKind::EvenCycle);

    let bt = bowtie();
    let b = binomial_of_walk(&bt, &[0, 1, 2, 3, 4, 5]).unwrap();
    assert_eq!(classify_circuit(&bt, &b), CircuitKind::TwoOddCyclesSharedVertex);
    assert!(in_ugb_structural(&bt, &b));

    let (g, walk) = two_triangles_and_path();
    let b = binomial_of_walk(&g, &walk).unwrap();
    assert_eq!(classify_circuit(&g, &b), CircuitKind::TwoOddCyclesJoinedByPath);
    assert_eq!(b.degree(), 5);
    assert_eq!(
        (b.exponent(3) + b.exponent(4), b.exponent(3).max(b.exponent(4))),
        (4, 2)
    );
    assert!(balanced(&g, &b));
}

#[test]
fn k4_square_is_not_primitive() {
    let k4 = complete_graph(4).unwrap();
    // edges: 0 = 01, 1 = 02, 2 = 03, 3 = 12, 4 = 13, 5 = 23
    let b = Binomial::new(&k4, vec![2, 0, 0, 0, 0, 2], vec![0, 1, 1, 1, 1, 0]).unwrap();
    let (primitive, analysis) = is_primitive(&k4, &b);
    assert!(!primitive);
    assert!(analysis.failure.is_some());
    assert_eq!(classify_circuit(&k4, &b), CircuitKind::NotACircuit);

    let graver = graver_oracle_for_graph(&k4, &OracleBudget::default()).unwrap();
    assert_eq!(graver.len(), 3);
    assert!(!graver.contains(&b));
    // it is a conformal sum of two Graver elements
    let d = b.difference();
    let signed: Vec<Vec<i64>> = graver
        .iter()
        .flat_map(|x| [x.difference(), x.difference().iter().map(|v| -v).collect()])
        .collect();
    let found = signed.iter().any(|x| {
        signed
            .iter()
            .any(|y| x.iter().zip(y).map(|(p, q)| p + q).eq(d.iter().copied()))
    });
    assert!(found);
}

#[test]
fn family_walks() {
    let g = family_graph(3, 3).unwrap();
    let full = binomial_of_walk(&g, &family_full_walk(3, 3).unwrap()).unwrap();
    let (primitive, a) = is_primitive(&g, &full);
    assert!(primitive);
    assert!(!is_mixed(&a));
    assert_eq!(a.pure_blocks(), vec![0]);
    assert!(!in_ugb_structural(&g, &full));
    assert_eq!(full.degree(), 6);
    assert!(matches!(witness_order(&a), Err(Error::NotMixed)));

    let mixed = binomial_of_walk(&g, &family_mixed_walk(3, 3).unwrap()).unwrap();
    let (primitive, a) = is_primitive(&g, &mixed);
    assert!(primitive && is_mixed(&a));
    let w = witness_order(&a).unwrap();
    let d = mixed.difference();
    for row in w.weight_rows() {
        assert_eq!(dot(row, &d), 0);
    }
}

#[test]
fn witness_order_rows() {
    let c4 = cycle_graph(4).unwrap();
    let b = binomial_of_walk(&c4, &[0, 1, 2, 3]).unwrap();
    let w = witness_order(&analyze(&c4, &b)).unwrap();
    assert_eq!(w.weight_rows(), [vec![2, 2, 2, 2]]);
    assert!(w.elimination_set().is_empty());
    assert_eq!(w.tiebreak(), [0, 1, 2, 3]);

    let bt = bowtie();
    let b = binomial_of_walk(&bt, &[0, 1, 2, 3, 4, 5]).unwrap();
    let a = analyze(&bt, &b);
    let w = witness_order(&a).unwrap();
    assert_eq!(w.weight_rows().len(), 2);
    for (i, row) in w.weight_rows().iter().enumerate() {
        let block = a.cyclic_blocks[i];
        let tp = a.class_count(block, toric_graph::Class::Plus) as i128;
        let tm = a.class_count(block, toric_graph::Class::Minus) as i128;
        let plus: Vec<i64> = b.plus().iter().map(|&x| x as i64).collect();
        let minus: Vec<i64> = b.minus().iter().map(|&x| x as i64).collect();
        assert_eq!(dot(row, &plus), tp * tm);
        assert_eq!(dot(row, &minus), tp * tm);
    }

    let (g, walk) = two_triangles_and_path();
    let b = binomial_of_walk(&g, &walk).unwrap();
    let w = witness_order(&analyze(&g, &b)).unwrap();
    assert!(w.elimination_set().is_empty());
    assert_eq!(w.weight_rows().len(), 2);
}

#[test]
fn certificates() {
    let g = family_graph(3, 3).unwrap();
    let full = binomial_of_walk(&g, &family_full_walk(3, 3).unwrap()).unwrap();
    let cert = pure_block_certificate(&g, &analyze(&g, &full)).unwrap();
    assert_eq!((cert.f.len(), cert.g.len()), (3, 3));
    assert!(cert.all().all(|h| balanced(&g, h)));

    let g = family_graph(4, 3).unwrap();
    let full = binomial_of_walk(&g, &family_full_walk(4, 3).unwrap()).unwrap();
    let cert = pure_block_certificate(&g, &analyze(&g, &full)).unwrap();
    assert_eq!((cert.f.len(), cert.g.len()), (4, 1));
    let square = binomial_of_walk(&g, &[0, 1, 2, 3]).unwrap();
    assert_eq!(cert.g[0], square);
    assert!(cert.all().all(|h| balanced(&g, h)));

    let c4 = cycle_graph(4).unwrap();
    let b = binomial_of_walk(&c4, &[0, 1, 2, 3]).unwrap();
    assert!(matches!(
        pure_block_certificate(&c4, &analyze(&c4, &b)),
        Err(Error::NoPureBlock)
    ));
}

#[test]
fn graver_elements_satisfy_structural_identities() {
    let graphs = [
        complete_graph(6).unwrap(),
        family_graph(3, 3).unwrap(),
        family_graph(4, 5).unwrap(),
        parse_graph("0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n4 5\n5 6\n6 7\n7 5\n0 8\n8 9\n9 0").unwrap(),
    ];
    for g in &graphs {
        for b in enumerate_graver(g, &EnumConfig::default()).unwrap().binomials() {
            assert!(balanced(g, &b));
            let a = analyze(g, &b);
            assert!(a.primitive);
            assert!(b.plus().iter().chain(b.minus()).all(|&x| x <= 2));
            let doubled: Vec<usize> = a.support.iter().copied().filter(|&e| b.exponent(e) == 2).collect();
            assert_eq!(doubled, a.blocks.cut_edges.iter().copied().collect::<Vec<_>>());
            let cyclic: u64 = a.cyclic_blocks.iter().map(|&i| a.blocks.blocks[i].len() as u64).sum();
            assert_eq!(2 * b.degree(), cyclic + 2 * a.blocks.cut_edges.len() as u64);
            if classify_circuit(g, &b) != CircuitKind::NotACircuit {
                assert!(in_ugb_structural(g, &b));
            }
            if in_ugb_structural(g, &b) {
                let w = witness_order(&a).unwrap();
                let d = b.difference();
                assert!(w.weight_rows().iter().all(|row| dot(row, &d) == 0));
            }
        }
    }
}
