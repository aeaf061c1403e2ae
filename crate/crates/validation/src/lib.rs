//! A tiny runner for acceptance checks: each check has a wall-clock limit,
//! collects its own failures, and reports one line.

use std::fmt;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

/// Failures and notes gathered while one check runs.
#[derive(Debug, Default)]
pub struct Check {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    pub fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn expect_eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    /// Extra context printed under the result line.
    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub limit: Duration,
    pub run: fn(&mut Check),
}

#[derive(Debug)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub limit: Duration,
    pub elapsed: Duration,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.elapsed <= self.limit
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2}: {} - {} ({:.2}s, limit {}s)",
            self.id,
            if self.pass() { "PASS" } else { "FAIL" },
            self.name,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )?;
        if self.elapsed > self.limit {
            write!(f, "\n      over the time limit")?;
        }
        for m in &self.failures {
            write!(f, "\n      failed: {m}")?;
        }
        for n in &self.notes {
            write!(f, "\n      note: {n}")?;
        }
        Ok(())
    }
}

/// Runs one check; a panic counts as a failure.
pub fn run(c: &Criterion) -> Outcome {
    let mut check = Check::default();
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(|| (c.run)(&mut check)));
    let elapsed = start.elapsed();
    if let Err(p) = result {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        check.failures.push(format!("panicked: {msg}"));
    }
    Outcome {
        id: c.id,
        name: c.name,
        limit: c.limit,
        elapsed,
        failures: check.failures,
        notes: check.notes,
    }
}

/// Runs the selected checks in order, printing each line as it finishes.
/// `only` restricts to the listed ids. Returns the outcomes.
pub fn run_all(list: &[Criterion], only: Option<&[u32]>) -> Vec<Outcome> {
    let mut out = Vec::new();
    for c in list.iter().filter(|c| only.map_or(true, |ids| ids.contains(&c.id))) {
        let o = run(c);
        println!("{o}");
        let _ = std::io::stdout().flush();
        out.push(o);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(_: &mut Check) {}

    fn bad(c: &mut Check) {
        c.expect_eq(1, 2, "one");
    }

    fn boom(_: &mut Check) {
        panic!("boom");
    }

    #[test]
    fn outcomes() {
        let mk = |id, run: fn(&mut Check)| Criterion { id, name: "x", limit: Duration::from_secs(5), run };
        assert!(run(&mk(1, ok)).pass());
        let o = run(&mk(2, bad));
        assert!(!o.pass());
        assert!(o.to_string().contains("FAIL") && o.to_string().contains("got 1, want 2"));
        let o = run(&mk(3, boom));
        assert!(o.failures[0].contains("boom"));
        let slow = Criterion { id: 4, name: "x", limit: Duration::ZERO, run: |_| std::thread::sleep(Duration::from_millis(2)) };
        assert!(!run(&slow).pass());
    }
}
