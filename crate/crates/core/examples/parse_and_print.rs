//! Parses a few formulas, prints them back and shows their surface choices,
//! elementarizations and closures.
//!
//! cargo run --example parse_and_print -- "AAx. EEy. y = x'"

use clarith::games::Oracle;
use clarith::syntax::{developments, parse, print, surface_choices, Player};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec![
            "AAx. EEy. y = x'".to_string(),
            "AAw. (Ex. x + x = w) -> EEx. x + x = w".to_string(),
            "(0 = 0 && 2 * 2 = 4) vv ~(3 = 3)".to_string(),
            "EEy. Et. T(x, 0, y, t)".to_string(),
        ]
    } else {
        args
    };
    for text in inputs {
        let f = match parse(&text) {
            Ok(f) => f,
            Err(e) => {
                println!("{text}\n  error: {e}\n");
                continue;
            }
        };
        println!("{text}");
        println!("  printed          {}", print(&f));
        println!("  elementary       {}", f.is_elementary());
        println!("  elementarization {}", f.elementarization());
        println!("  choice closure   {}", f.choice_closure());
        for sc in surface_choices(&f) {
            println!("  surface choice   {:?} at [{}] owned by {}", sc.kind, sc.path, sc.owner);
        }
        if f.is_sentence() {
            for p in [Player::Environment, Player::Machine] {
                for d in developments(&f, p, "c").unwrap() {
                    println!("  {p} may move    {:?} -> {}", d.template.payload, d.result);
                }
            }
            if f.is_elementary() {
                println!("  truth at 32      {:?}", Oracle::new(32).eval(&f).unwrap());
            }
        }
        println!();
    }
}
