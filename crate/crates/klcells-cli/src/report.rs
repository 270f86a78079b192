use std::io::{self, Write};

/// Tab-separated records followed by `summary` records. Nothing in here
/// depends on timing or thread count, so reports compare byte for byte.
#[derive(Debug, Default)]
pub struct Report {
    records: Vec<String>,
    summary: Vec<(String, String)>,
    failures: Vec<String>,
}

impl Report {
    pub fn record<S: AsRef<str>>(&mut self, fields: &[S]) {
        let line: Vec<&str> = fields.iter().map(AsRef::as_ref).collect();
        debug_assert!(line.iter().all(|f| !f.contains(['\t', '\n'])));
        self.records.push(line.join("\t"));
    }

    pub fn summary(&mut self, key: &str, value: impl ToString) {
        self.summary.push((key.to_string(), value.to_string()));
    }

    /// Marks the job as a failed verification (exit status 1).
    pub fn fail(&mut self, why: impl Into<String>) {
        self.failures.push(why.into());
    }

    pub fn failed(&self) -> bool {
        !self.failures.is_empty()
    }

    pub fn write_tsv(&self, out: &mut impl Write) -> io::Result<()> {
        for r in &self.records {
            writeln!(out, "{r}")?;
        }
        for (k, v) in &self.summary {
            writeln!(out, "summary\t{k}\t{v}")?;
        }
        let status = if self.failed() { "FAIL" } else { "OK" };
        writeln!(out, "summary\tstatus\t{status}")
    }

    pub fn write_human(&self, out: &mut impl Write) -> io::Result<()> {
        let width = self.summary.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.summary {
            writeln!(out, "  {k:<width$}  {v}")?;
        }
        for f in &self.failures {
            writeln!(out, "  FAILED: {f}")?;
        }
        Ok(())
    }
}
