use serde::Serialize;

/// One named check with an optional counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a check; `failure` carries the witness of the first violation.
    pub fn record(&mut self, name: impl Into<String>, failure: Option<String>) {
        self.checks.push(Check { name: name.into(), passed: failure.is_none(), witness: failure });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.record(name, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.record(name, Some(witness.into()));
    }

    pub fn extend(&mut self, prefix: &str, other: ValidationReport) {
        for c in other.checks {
            self.checks.push(Check { name: format!("{prefix}{}", c.name), ..c });
        }
    }

    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failed(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed && c.name == name)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// First item of `items` violating `ok`, rendered by `show`.
pub fn first_violation<T, I>(items: I, ok: impl Fn(&T) -> bool, show: impl Fn(&T) -> String) -> Option<String>
where
    I: IntoIterator<Item = T>,
{
    items.into_iter().find(|t| !ok(t)).map(|t| show(&t))
}
