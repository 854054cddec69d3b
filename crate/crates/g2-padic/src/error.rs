use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalFieldError {
    #[error("insufficient p-adic precision: {0}")]
    InsufficientPrecision(String),
    #[error("operands live over different primes ({0} vs {1})")]
    PrimeMismatch(u64, u64),
    #[error("prime {0} is not supported (need a prime p >= 5)")]
    BadPrime(u64),
    #[error("degenerate cubic x^3 + {d}x - {n} mod {p}: {reason}")]
    Degenerate { d: i64, n: i64, p: u64, reason: String },
    #[error("cell enumeration needs {needed} cells but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("division by zero")]
    DivisionByZero,
}
