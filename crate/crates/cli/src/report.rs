//! Run reports: a command echo plus named verdicts, each failure carrying a
//! concrete witness. Output is byte-deterministic; wall-clock timings go to
//! stderr only on request.

use serde::Serialize;

#[derive(Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    pub witness: String,
}

#[derive(Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub verdicts: Vec<Verdict>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport { schema: 1, command: command.into(), verdicts: Vec::new() }
    }

    pub fn check(&mut self, name: &str, pass: bool, witness: impl Into<String>) {
        self.verdicts.push(Verdict { check: name.into(), pass, witness: witness.into() });
    }

    /// Informational line, never fails the run.
    pub fn info(&mut self, name: &str, witness: impl Into<String>) {
        self.check(name, true, witness);
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("report serializes");
            s.push('\n');
            return s;
        }
        let mut out = format!("# {}\n", self.command);
        let width = self.verdicts.iter().map(|v| v.check.len()).max().unwrap_or(0);
        for v in &self.verdicts {
            let mark = if v.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark}  {:<width$}  {}\n", v.check, v.witness));
        }
        let passed = self.verdicts.iter().filter(|v| v.pass).count();
        out.push_str(&format!(
            "overall: {} ({passed}/{} checks)\n",
            if self.all_pass() { "PASS" } else { "FAIL" },
            self.verdicts.len()
        ));
        out
    }
}
