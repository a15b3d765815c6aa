//! Syntax trees for the identity language.

/// The named unary operators a space provides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    /// `d` — the primal-derived operator.
    Diamond,
    /// `psi` — the dual existential operator.
    Psi,
    /// `cl` — topological closure.
    Closure,
    /// `int` — topological interior.
    Interior,
    /// `cld` — `A ∪ d(A)`.
    DiamondClosure,
    /// `intd` — `A ∩ psi(A)`.
    DiamondInterior,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Diamond => "d",
            Func::Psi => "psi",
            Func::Closure => "cl",
            Func::Interior => "int",
            Func::DiamondClosure => "cld",
            Func::DiamondInterior => "intd",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "d" => Func::Diamond,
            "psi" => Func::Psi,
            "cl" => Func::Closure,
            "int" => Func::Interior,
            "cld" => Func::DiamondClosure,
            "intd" => Func::DiamondInterior,
            _ => return None,
        })
    }
}

/// A set-valued expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetExpr {
    Var(String),
    /// `X`, the whole ground set.
    Full,
    /// `0`, the empty set.
    Empty,
    /// `~e`, complement.
    Complement(Box<SetExpr>),
    /// `f(e)` for one of the named operators.
    App(Func, Box<SetExpr>),
    /// `e | e`.
    Union(Box<SetExpr>, Box<SetExpr>),
    /// `e - e`.
    Difference(Box<SetExpr>, Box<SetExpr>),
    /// `e & e`.
    Intersection(Box<SetExpr>, Box<SetExpr>),
}

impl SetExpr {
    /// Binding strength for printing and parsing: complement and
    /// application bind tightest (4), then `&` (3), then `-` (2), then
    /// `|` (1). All binary operators are left-associative.
    pub(crate) fn precedence(&self) -> u8 {
        match self {
            SetExpr::Var(_)
            | SetExpr::Full
            | SetExpr::Empty
            | SetExpr::Complement(_)
            | SetExpr::App(..) => 4,
            SetExpr::Intersection(..) => 3,
            SetExpr::Difference(..) => 2,
            SetExpr::Union(..) => 1,
        }
    }

    pub(crate) fn has_vars(&self) -> bool {
        match self {
            SetExpr::Var(_) => true,
            SetExpr::Full | SetExpr::Empty => false,
            SetExpr::Complement(e) | SetExpr::App(_, e) => e.has_vars(),
            SetExpr::Union(a, b)
            | SetExpr::Difference(a, b)
            | SetExpr::Intersection(a, b) => a.has_vars() || b.has_vars(),
        }
    }
}

/// Quantification domain of a bound variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sort {
    /// Every subset of the ground set (the default).
    Set,
    /// The open sets of the topology.
    Open,
    /// The closed sets of the topology.
    Closed,
    /// The open sets of the star topology.
    OpenStar,
}

impl Sort {
    pub fn name(self) -> &'static str {
        match self {
            Sort::Set => "set",
            Sort::Open => "open",
            Sort::Closed => "closed",
            Sort::OpenStar => "openstar",
        }
    }

    pub fn from_name(name: &str) -> Option<Sort> {
        Some(match name {
            "set" => Sort::Set,
            "open" => Sort::Open,
            "closed" => Sort::Closed,
            "openstar" => Sort::OpenStar,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binder {
    pub name: String,
    pub sort: Sort,
}

/// Relation symbol between two set expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    /// `=`
    Eq,
    /// `<=` (subset-or-equal)
    Subset,
}

/// One conjunct of a hypothesis or conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    /// The space-level suitability predicate.
    Suitable,
    /// The space-level closed-complement condition.
    Ccc,
    /// `inP(e)` — membership of the expression's value in the primal.
    InP(SetExpr),
    /// `notinP(e)` — non-membership.
    NotInP(SetExpr),
    /// `e = e` or `e <= e`.
    Relation(SetExpr, Rel, SetExpr),
}

impl Atom {
    pub(crate) fn has_vars(&self) -> bool {
        match self {
            Atom::Suitable | Atom::Ccc => false,
            Atom::InP(e) | Atom::NotInP(e) => e.has_vars(),
            Atom::Relation(l, _, r) => l.has_vars() || r.has_vars(),
        }
    }
}

/// A universally quantified statement:
/// `forall binders: hypothesis => conclusion` (hypothesis optional).
///
/// Invariant maintained by the parser: every variable occurring in
/// `hypothesis` or `conclusion` is named by exactly one binder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    pub binders: Vec<Binder>,
    /// Empty when the formula has no `=>`.
    pub hypothesis: Vec<Atom>,
    pub conclusion: Vec<Atom>,
}
