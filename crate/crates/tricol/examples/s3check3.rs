use tricol::surfaces::PlatPresentation;
use tricol::tribracket::{dehn_tribracket, FiniteGroup};

fn main() {
    let s3 = dehn_tribracket(&FiniteGroup::symmetric(3));
    let candidates: Vec<Vec<i32>> = vec![
        vec![2, -1, 2, -1],
        vec![-2, 1, -2, 1],
        vec![2, -1, -1, 2],
        vec![2, 2, -1, -1, 2],
        vec![2, 1, 1, 2],
        vec![2, 2, 1, 1],
        vec![2, -3, 2, -3],
        vec![2, 3, 3, 2],
        vec![2, 2, -3, -3],
    ];
    for braid in candidates {
        let plat = PlatPresentation { bridges: 2, braid: braid.clone() };
        match plat.components() {
            Ok(1) => match plat.classical_count(&s3) {
                Ok(c) => println!("{braid:?}: knot, Dehn(S3) count = {c}"),
                Err(e) => println!("{braid:?}: error {e}"),
            },
            Ok(n) => println!("{braid:?}: {n} components"),
            Err(e) => println!("{braid:?}: bad word {e}"),
        }
    }
}
