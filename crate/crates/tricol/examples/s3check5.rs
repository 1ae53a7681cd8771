use tricol::catalog;
use tricol::colorsys::count_colorings;
use tricol::surfaces::PlatPresentation;
use tricol::tribracket::{dehn_tribracket, FiniteGroup};

fn main() {
    let s3 = dehn_tribracket(&FiniteGroup::symmetric(3));
    let s4 = dehn_tribracket(&FiniteGroup::symmetric(4));
    let want_s3 = count_colorings(&catalog::system("10_1").unwrap(), &s3).0;
    let want_s4 = count_colorings(&catalog::system("10_1").unwrap(), &s4).0;
    let letters = [1i32, -1, 2, -2, 3, -3];
    let mut found = 0;
    for len in [5usize, 6] {
        let mut word = vec![0usize; len];
        'outer: loop {
            let braid: Vec<i32> = word.iter().map(|&i| letters[i]).collect();
            let plat = PlatPresentation { bridges: 2, braid: braid.clone() };
            if plat.components().ok() == Some(1)
                && plat.classical_count(&s3).unwrap() == want_s3
                && plat.classical_count(&s4).unwrap() == want_s4
            {
                println!("candidate {braid:?}");
                found += 1;
                if found >= 12 {
                    return;
                }
            }
            for i in (0..len).rev() {
                word[i] += 1;
                if word[i] < letters.len() {
                    continue 'outer;
                }
                word[i] = 0;
            }
            break;
        }
        if found > 0 {
            return;
        }
    }
}
