//! Itemized pass/fail reports produced by the axiom checkers.

use std::fmt;

use serde::Serialize;

/// Violations beyond this many per item are counted but not stored.
const MAX_STORED: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub violation_count: usize,
    pub violations: Vec<String>,
}

impl CheckItem {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts a new item; subsequent [`CheckReport::fail`] calls attach to it.
    pub fn item(&mut self, name: impl Into<String>) {
        self.items.push(CheckItem {
            name: name.into(),
            violation_count: 0,
            violations: Vec::new(),
        });
    }

    pub fn fail(&mut self, message: impl Into<String>) {
        let item = self
            .items
            .last_mut()
            .expect("fail() called before item()");
        item.violation_count += 1;
        if item.violations.len() < MAX_STORED {
            item.violations.push(message.into());
        }
    }

    /// Records `ok` under the current item, building the message lazily.
    pub fn expect(&mut self, ok: bool, message: impl FnOnce() -> String) {
        if !ok {
            self.fail(message());
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn failed_items(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed())
    }

    pub fn extend(&mut self, prefix: &str, other: CheckReport) {
        for mut item in other.items {
            item.name = format!("{prefix}{}", item.name);
            self.items.push(item);
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            let status = if item.passed() { "ok" } else { "FAILED" };
            writeln!(f, "{:<40} {status}", item.name)?;
            for v in &item.violations {
                writeln!(f, "    {v}")?;
            }
            if item.violation_count > item.violations.len() {
                writeln!(
                    f,
                    "    ... {} more",
                    item.violation_count - item.violations.len()
                )?;
            }
        }
        Ok(())
    }
}
