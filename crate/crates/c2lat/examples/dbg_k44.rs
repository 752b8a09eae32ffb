use std::time::Instant;

fn main() {
    let g = c2lat::geometry::Graph::complete_bipartite(4, 4);
    let aut = c2lat::autgraph::automorphism_group(&g, &vec![0; 8]).unwrap();
    println!("Aut(K44) vertex order = {}", aut.order());
    let combined: Vec<_> = aut
        .generators()
        .iter()
        .map(|p| g.vertex_perm_to_combined(p).unwrap())
        .collect();
    let ambient = c2lat::perm::PermGroup::new(g.combined_degree(), combined).unwrap();
    println!("ambient degree {} order {}", ambient.degree(), ambient.order());
    let omega: Vec<u32> = (8..24).collect();
    let t = Instant::now();
    let res = c2lat::regular::enumerate_regular_subgroups(&ambient, &omega).unwrap();
    println!(
        "classes = {}  subgroups_found = {}  nodes = {}  in {:?}",
        res.classes.len(),
        res.subgroups_found,
        res.nodes_explored,
        t.elapsed()
    );
}
