use tricol::catalog;
use tricol::colorsys::{brute_force_count, count_colorings};
use tricol::diagrams::{emit_equations, trace_faces, PdCode};
use tricol::surfaces::{spun_triplane, triplane_to_system, PlatPresentation};
use tricol::tribracket::{dehn_tribracket, FiniteGroup};

fn main() {
    let s3 = dehn_tribracket(&FiniteGroup::symmetric(3));
    for name in ["trefoil", "figure_eight"] {
        let plat = PlatPresentation::parse(
            catalog::bundled_file(&format!("plats/{name}.json")).unwrap(),
        )
        .unwrap();
        let pd = plat.to_pd().unwrap();
        let (rad, _) = trace_faces(&pd).unwrap();
        let sys = emit_equations(&rad);
        let fast = count_colorings(&sys, &s3).0;
        let brute = brute_force_count(&sys, &s3, 10_000_000).unwrap();
        let spun = spun_triplane(&plat).unwrap();
        let spun_count = count_colorings(&triplane_to_system(&spun).unwrap(), &s3).0;
        println!("{name}: solver={fast} brute={brute} spun={spun_count}");
    }
    // also freeze the spun trefoil triplane json
    let plat = PlatPresentation { bridges: 2, braid: vec![2, 2, 2] };
    let tp = spun_triplane(&plat).unwrap();
    println!("{}", tricol::surfaces::TriplaneFile::render(&tp));
}
