//! Decides every shipped instance under `instances/` and prints the report.
//! Inputs the library cannot handle are reported with their exit code.

use std::fs;
use std::path::PathBuf;

use asai_periods::cli::exit_code;
use asai_periods::decider::decide_period;
use asai_periods::instance::InstanceDocument;

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances");
    let mut paths: Vec<_> = fs::read_dir(&dir)
        .expect("instances directory")
        .filter_map(|e| e.ok().map(|e| e.path()))
        .collect();
    paths.sort();
    for path in paths {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let text = fs::read_to_string(&path).unwrap();
        let outcome = InstanceDocument::from_json(&text)
            .and_then(|doc| doc.to_input())
            .and_then(|input| decide_period(&input).map(|r| (input, r)));
        match outcome {
            Ok((input, report)) => println!("== {name}\n{input}\n{report}\n"),
            Err(e) => println!("== {name}\nerror (exit {}): {e}\n", exit_code(&e)),
        }
    }
}
