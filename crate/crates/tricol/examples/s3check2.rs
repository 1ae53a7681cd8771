use tricol::catalog;
use tricol::colorsys::count_colorings;
use tricol::tribracket::{dehn_tribracket, FiniteGroup};

fn main() {
    let s3 = dehn_tribracket(&FiniteGroup::symmetric(3));
    for name in ["8_1", "10_1", "9_1", "10_3"] {
        let sys = catalog::system(name).unwrap();
        println!("table {name} over Dehn(S3): {}", count_colorings(&sys, &s3).0);
    }
    let plat = tricol::surfaces::PlatPresentation { bridges: 2, braid: vec![2, 2, -1, 2] };
    println!("{}", plat.to_pd().unwrap().render());
}
