use tricol::catalog;
use tricol::colorsys::count_colorings;
use tricol::surfaces::PlatPresentation;
use tricol::tribracket::{dehn_tribracket, FiniteGroup};

fn main() {
    let s3 = dehn_tribracket(&FiniteGroup::symmetric(3));
    let s4 = dehn_tribracket(&FiniteGroup::symmetric(4));
    let want_s3 = count_colorings(&catalog::system("10_1").unwrap(), &s3).0;
    let want_s4 = count_colorings(&catalog::system("10_1").unwrap(), &s4).0;
    let tre_s4 = count_colorings(&catalog::system("8_1").unwrap(), &s4).0;
    println!("targets: fig8 S3={want_s3} S4={want_s4}; trefoil S4={tre_s4}");
    let tre = PlatPresentation { bridges: 2, braid: vec![2, 2, 2] };
    println!("plat trefoil S4 = {}", tre.classical_count(&s4).unwrap());

    let letters = [1i32, -1, 2, -2, 3, -3];
    for a in letters {
        for b in letters {
            for c in letters {
                for d in letters {
                    let braid = vec![a, b, c, d];
                    let plat = PlatPresentation { bridges: 2, braid: braid.clone() };
                    if plat.components().ok() != Some(1) {
                        continue;
                    }
                    let c3 = plat.classical_count(&s3).unwrap();
                    if c3 != want_s3 {
                        continue;
                    }
                    let c4 = plat.classical_count(&s4).unwrap();
                    if c4 == want_s4 {
                        println!("candidate {braid:?}: S3={c3} S4={c4}");
                    }
                }
            }
        }
    }
    let five = PlatPresentation { bridges: 2, braid: vec![2, 2, -1, -1, 2] };
    println!("[2,2,-1,-1,2] S4 = {}", five.classical_count(&s4).unwrap());
}
