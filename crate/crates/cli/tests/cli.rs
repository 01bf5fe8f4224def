use std::io::Write;
use std::process::{Command, Output, Stdio};

fn cyclotour(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclotour"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cyclotour"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generate_triangle() {
    let o = cyclotour(&["generate", "--k", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3\n010\n001\n100\n");
}

#[test]
fn generate_deleted_vertex() {
    let o = cyclotour(&["generate", "--k", "1", "--delete-vertex"]);
    assert_eq!(stdout(&o), "2\n01\n00\n");
    let o = cyclotour(&["generate", "--k", "0", "--delete-vertex"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_level_two_passes() {
    let o = cyclotour(&["verify", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verdict          pass"));
    assert!(text.ends_with("RESULT max=1 set=0,1,2 exact=true visited=255\n"));
}

#[test]
fn verify_level_four_is_refused() {
    let o = cyclotour(&["verify", "--k", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("refusing k=4"), "{err}");
    assert!(err.contains("1208925819614629174706175"), "{err}");
}

#[test]
fn verify_budget_flag() {
    let o = cyclotour(&["verify", "--k", "2", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cyclotour(&["verify", "--k", "2", "--threads", "3"]);
    assert!(stdout(&o).contains("RESULT max=1 set=0,1,2"));
}

#[test]
fn generate_pipes_into_search() {
    let gen = cyclotour(&["generate", "--k", "2", "--delete-vertex"]);
    let o = with_stdin(&["search", "--input", "-", "--size", "4"], &gen.stdout);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("max min-degree   1"), "{text}");
    assert!(text.lines().last().unwrap().starts_with("RESULT max=1 set="));
}

#[test]
fn search_reads_files() {
    let dir = std::env::temp_dir().join(format!("cyclotour-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t1.txt");
    std::fs::write(&path, "3\n010\n001\n100\n").unwrap();
    let o = cyclotour(&["search", "--input", path.to_str().unwrap(), "--size", "3"]);
    assert!(stdout(&o).contains("RESULT max=1 set=0,1,2 exact=true"));

    std::fs::write(&path, "2\n01\n01\n").unwrap();
    let o = cyclotour(&["search", "--input", path.to_str().unwrap(), "--size", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("self-loop"));

    let o = cyclotour(&["search", "--input", dir.join("missing").to_str().unwrap(), "--size", "1"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn certify_prints_tree() {
    let o = cyclotour(&["certify", "--k", "2", "--set", "0,3,6,7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("bound        1"));
    assert!(text.contains("actual       1"));
    assert!(text.contains("two-small k=2 |X|=4 rotation=0 parts=(1,1,2) bound=1"));
    assert!(text.contains("    empty-part k=1 |X|=1 rotation=0"));

    let o = cyclotour(&["certify", "--k", "2", "--set", "0,1,2,3,4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cyclotour(&["certify", "--k", "2", "--set", "0,x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn split_is_deterministic_csv() {
    let gen = cyclotour(&["generate", "--k", "2", "--delete-vertex"]);
    let args = ["split", "--input", "-", "--trials", "20", "--seed", "5"];
    let a = with_stdin(&args, &gen.stdout);
    let b = with_stdin(&args, &gen.stdout);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("trial,seed,delta_one,delta_two"));
    assert_eq!(lines.count(), 20);

    let odd = with_stdin(&["split", "--input", "-", "--trials", "1"], b"3\n010\n001\n100\n");
    assert_eq!(odd.status.code(), Some(2));
}

#[test]
fn table_csv() {
    let o = cyclotour(&["table", "--kmax", "3"]);
    let text = stdout(&o);
    assert!(text.starts_with("k,n,s,bound,gap_num,gap_den,log3_s\n"));
    assert!(text.contains("\n2,4,3,1,1,2,"));
    assert!(text.contains("\n3,13,12,5,1,1,"));
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("cyclotour-out-{}.txt", std::process::id()));
    let o = cyclotour(&["generate", "--k", "1", "-o", path.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "3\n010\n001\n100\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cyclotour(&["verify"]).status.code(), Some(2));
    assert_eq!(cyclotour(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cyclotour(&["verify", "--k", "2", "--threads", "0"]).status.code(), Some(2));
}
