use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fourecc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn fourecc");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn complete(n: usize) -> String {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push(format!("{u} {v}"));
        }
    }
    format!("{n} {}\n{}\n", e.len(), e.join("\n"))
}

const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";

#[test]
fn components_k5_and_k4() {
    let o = run(&["components", "-"], &complete(5));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 1 2 3 4\n");
    let o = run(&["components", "-"], &complete(4));
    assert_eq!(stdout(&o), "0\n1\n2\n3\n");
}

#[test]
fn components_of_disjoint_k5_and_k4() {
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            edges.push(format!("{u} {v}"));
        }
    }
    for u in 5..9 {
        for v in u + 1..9 {
            edges.push(format!("{u} {v}"));
        }
    }
    let text = format!("9 {}\n{}\n", edges.len(), edges.join("\n"));
    let o = run(&["components", "-"], &text);
    assert_eq!(stdout(&o), "0 1 2 3 4\n5\n6\n7\n8\n");
}

#[test]
fn components_from_file() {
    let dir = std::env::temp_dir().join(format!("fourecc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k5.txt");
    std::fs::write(&path, complete(5)).unwrap();
    let o = run(&["components", path.to_str().unwrap()], "");
    assert_eq!(stdout(&o), "0 1 2 3 4\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cuts_output() {
    let o = run(&["cuts", "-"], &complete(5));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");

    let o = run(&["cuts", "-"], &complete(4));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    let mut sorted = lines.clone();
    sorted.sort_by_key(|l| l.split(' ').take(3).map(|x| x.parse::<usize>().unwrap()).collect::<Vec<_>>());
    assert_eq!(lines, sorted);
    for l in lines {
        let parts: Vec<&str> = l.split(' ').collect();
        assert_eq!(parts.len(), 5, "{l}");
        assert!(parts[3].starts_with("type="));
        // Every 3-cut of K4 isolates a single vertex.
        assert!(parts[4] == "rsize=1" || parts[4] == "rsize=3", "{l}");
    }
}

#[test]
fn cuts_rejects_two_cut() {
    let o = run(&["cuts", "-"], C4);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("2-cut"), "{err}");
}

#[test]
fn count_and_check4() {
    let theta = "5 6\n0 2\n2 1\n0 3\n3 1\n0 4\n4 1\n";
    assert_eq!(stdout(&run(&["count-min3", "-"], theta)), "8\n");
    assert_eq!(stdout(&run(&["count-min3", "-"], C4)), "0\n");
    assert_eq!(stdout(&run(&["check4", "-"], &complete(5))), "yes\n");
    assert_eq!(stdout(&run(&["check4", "-"], &complete(4))), "no\n");
}

#[test]
fn input_errors_exit_one() {
    let o = run(&["components", "-"], "3 1\n0 7\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 2"));
    let o = run(&["components", "/nonexistent/graph.txt"], "");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(run(&["components"], "").status.code(), Some(1));
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
}

#[test]
fn verify_ok() {
    let o = run(&["verify", "--model", "random_3ec", "--n", "10", "--iters", "100", "--seed", "7"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ok 100\n");
}

#[test]
fn verify_bad_flags() {
    assert_eq!(run(&["verify", "--n", "0"], "").status.code(), Some(1));
    assert_eq!(run(&["verify", "--model", "nope", "--n", "5"], "").status.code(), Some(1));
    assert_eq!(run(&["verify", "--n", "five"], "").status.code(), Some(1));
}

#[test]
fn verify_reports_counterexample() {
    let o = run(&["verify", "--model", "random_3ec", "--n", "8", "--iters", "20", "--inject-bug"], "");
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.starts_with("# mismatch"), "{text}");
    // The echoed graph parses as a graph file.
    let g = fourecc::parse_graph(&text).unwrap();
    assert_eq!(g.n(), 8);
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--model", "random_3ec", "--n", "10", "--seed", "1"];
    let a = stdout(&run(&args, ""));
    let b = stdout(&run(&args, ""));
    assert_eq!(a, b);
    assert!(a.starts_with("10 "));
    let theta = stdout(&run(&["gen", "--model", "theta", "--n", "1"], ""));
    assert_eq!(theta, "5 6\n0 2\n2 1\n0 3\n3 1\n0 4\n4 1\n");
}

#[test]
fn bench_rows() {
    let o = run(&["bench", "--sizes", "1000,2000"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,m,cuts,millis");
    assert_eq!(lines.len(), 3);
    for l in &lines[1..] {
        let f: Vec<usize> = l.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(f[1], 2 * f[0]);
        assert!(f[2] <= 10 * f[0]);
    }
    assert_eq!(run(&["bench", "--sizes", "2000,1000"], "").status.code(), Some(1));
}
