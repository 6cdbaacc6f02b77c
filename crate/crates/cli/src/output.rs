//! Human-readable or `key=value` output.

#[derive(Debug, Default)]
pub struct Output {
    machine: bool,
    lines: Vec<String>,
}

impl Output {
    pub fn new(machine: bool) -> Self {
        Self {
            machine,
            lines: Vec::new(),
        }
    }

    pub fn is_machine(&self) -> bool {
        self.machine
    }

    pub fn field(&mut self, key: &str, value: impl ToString) {
        let value = value.to_string();
        self.lines.push(if self.machine {
            format!("{key}={value}")
        } else {
            format!("{key}: {value}")
        });
    }

    /// Row-major, one row per line; a single `;`-joined value in machine mode.
    pub fn matrix(&mut self, key: &str, rows: &[Vec<String>]) {
        if self.machine {
            let joined: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(","))).collect();
            self.lines.push(format!("{key}={}", joined.join(";")));
        } else {
            self.lines.push(format!("{key}:"));
            self.lines
                .extend(rows.iter().map(|r| format!("  [{}]", r.join(", "))));
        }
    }

    /// Free text, kept verbatim in both modes.
    pub fn text(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn render(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}
