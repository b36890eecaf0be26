//! A small expression language for the groups this crate can build.
//!
//! ```text
//! Expr   := Term ('*' Term)*
//! Term   := Atom | 'sdp(' Module ',' Expr ',' Action ')'
//! Atom   := 'C(' n ')' | 'EA(' p ',' k ')' | 'Homocyclic(' m ',' k ')' | 'D(' n ')'
//!         | 'Q8' | 'ES(' p ',' ('+'|'-') ')' | 'SL23' | 'Sz8Borel' | 'A5'
//! Module := Block ('^' k)? ('x' Block ('^' k)?)*
//! Block  := m | '(' m ('x' m)+ ')'
//! Action := 'maxker' | 'trivial' | 'mats(' Gen (',' Gen)* ')'
//! Gen    := '{' Matrix (',' Matrix)* '}'
//! Matrix := '[' Row (';' Row)* ']'
//! Row    := n (',' n)*
//! ```
//!
//! `(2x2)^4` is four copies of `C2 x C2`, each acted on as one block. In
//! `mats(...)` there is one `{...}` per generator of the actor and one matrix
//! per module block. Whitespace and `#` comments are ignored.

mod parser;

use std::fmt;

use crate::constructors::{
    build_base, direct_product, extraspecial, semidirect_product, sz8_borel, ActionSpec, Family,
    ModuleSpec, Sign,
};
use crate::error::Result;
use crate::group::FiniteGroup;

pub use parser::parse_group_expr;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Cyclic(u64),
    ElementaryAbelian(u64, u64),
    Homocyclic(u64, u64),
    Dihedral(u64),
    Quaternion8,
    Extraspecial(u64, Sign),
    SL23,
    Sz8Borel,
    Alt5,
}

/// A parsed group expression. Direct products are flat with at least two
/// factors, none of which is itself a direct product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Atom(Atom),
    Direct(Vec<GroupExpr>),
    Sdp {
        module: ModuleSpec,
        actor: Box<GroupExpr>,
        action: ActionSpec,
    },
}

impl Atom {
    fn order(&self) -> Option<u64> {
        match *self {
            Atom::Cyclic(n) | Atom::Dihedral(n) => Some(n),
            Atom::ElementaryAbelian(m, k) | Atom::Homocyclic(m, k) => {
                m.checked_pow(u32::try_from(k).ok()?)
            }
            Atom::Quaternion8 => Some(8),
            Atom::Extraspecial(p, _) => p.checked_pow(3),
            Atom::SL23 => Some(24),
            Atom::Sz8Borel => Some(448),
            Atom::Alt5 => Some(60),
        }
    }

    fn build(&self, bound: usize) -> Result<FiniteGroup> {
        match *self {
            Atom::Cyclic(n) => build_base(Family::Cyclic, &[n], bound),
            Atom::ElementaryAbelian(p, k) => build_base(Family::ElementaryAbelian, &[p, k], bound),
            Atom::Homocyclic(m, k) => build_base(Family::Homocyclic, &[m, k], bound),
            Atom::Dihedral(n) => build_base(Family::Dihedral, &[n], bound),
            Atom::Quaternion8 => build_base(Family::Quaternion8, &[], bound),
            Atom::Extraspecial(p, sign) => extraspecial(p, sign),
            Atom::SL23 => build_base(Family::SL23, &[], bound),
            Atom::Sz8Borel => sz8_borel(),
            Atom::Alt5 => build_base(Family::Alt5, &[], bound),
        }
    }
}

impl GroupExpr {
    /// Direct product of `factors`, flattening nested products.
    pub fn direct(factors: Vec<GroupExpr>) -> GroupExpr {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                GroupExpr::Direct(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().expect("one factor")
        } else {
            GroupExpr::Direct(flat)
        }
    }

    /// Group order computed from the expression alone, `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        match self {
            GroupExpr::Atom(a) => a.order(),
            GroupExpr::Direct(fs) => fs
                .iter()
                .try_fold(1u64, |acc, f| acc.checked_mul(f.order()?)),
            GroupExpr::Sdp { module, actor, .. } => module.order()?.checked_mul(actor.order()?),
        }
    }

    pub fn build(&self, bound: usize) -> Result<FiniteGroup> {
        if self.order().map_or(true, |o| o > bound as u64) {
            return Err(crate::Error::BoundExceeded { bound });
        }
        match self {
            GroupExpr::Atom(a) => a.build(bound),
            GroupExpr::Direct(fs) => {
                let groups = fs.iter().map(|f| f.build(bound)).collect::<Result<Vec<_>>>()?;
                direct_product(&groups, bound)
            }
            GroupExpr::Sdp {
                module,
                actor,
                action,
            } => {
                let actor = actor.build(bound)?;
                Ok(semidirect_product(module, &actor, action, bound)?.group)
            }
        }
    }
}

fn write_list<T>(
    f: &mut fmt::Formatter<'_>,
    items: &[T],
    sep: &str,
    mut each: impl FnMut(&mut fmt::Formatter<'_>, &T) -> fmt::Result,
) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        each(f, x)?;
    }
    Ok(())
}

/// Canonical module text: runs of equal blocks collapse into one power.
pub fn module_to_string(module: &ModuleSpec) -> String {
    let mut runs: Vec<((u64, u32), usize)> = Vec::new();
    for &b in &module.factors {
        match runs.last_mut() {
            Some((last, k)) if *last == b => *k += 1,
            _ => runs.push((b, 1)),
        }
    }
    let parts: Vec<String> = runs
        .into_iter()
        .map(|((m, r), k)| {
            let block = if r == 1 {
                m.to_string()
            } else {
                format!("({})", vec![m.to_string(); r as usize].join("x"))
            };
            if k == 1 {
                block
            } else {
                format!("{block}^{k}")
            }
        })
        .collect();
    parts.join("x")
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic(n) => write!(f, "C({n})"),
            Atom::ElementaryAbelian(p, k) => write!(f, "EA({p},{k})"),
            Atom::Homocyclic(m, k) => write!(f, "Homocyclic({m},{k})"),
            Atom::Dihedral(n) => write!(f, "D({n})"),
            Atom::Quaternion8 => f.write_str("Q8"),
            Atom::Extraspecial(p, Sign::Plus) => write!(f, "ES({p},+)"),
            Atom::Extraspecial(p, Sign::Minus) => write!(f, "ES({p},-)"),
            Atom::SL23 => f.write_str("SL23"),
            Atom::Sz8Borel => f.write_str("Sz8Borel"),
            Atom::Alt5 => f.write_str("A5"),
        }
    }
}

fn write_action(f: &mut fmt::Formatter<'_>, action: &ActionSpec) -> fmt::Result {
    match action {
        ActionSpec::Trivial => f.write_str("trivial"),
        ActionSpec::MaximalKernels => f.write_str("maxker"),
        ActionSpec::ExplicitMatrices(gens) => {
            f.write_str("mats(")?;
            write_list(f, gens, ",", |f, blocks| {
                f.write_str("{")?;
                write_list(f, blocks, ",", |f, m| {
                    f.write_str("[")?;
                    write_list(f, m, ";", |f, row| {
                        write_list(f, row, ",", |f, x| write!(f, "{x}"))
                    })?;
                    f.write_str("]")
                })?;
                f.write_str("}")
            })?;
            f.write_str(")")
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Atom(a) => write!(f, "{a}"),
            GroupExpr::Direct(fs) => write_list(f, fs, "*", |f, x| write!(f, "{x}")),
            GroupExpr::Sdp {
                module,
                actor,
                action,
            } => {
                write!(f, "sdp({},{actor},", module_to_string(module))?;
                write_action(f, action)?;
                f.write_str(")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn atom() -> impl Strategy<Value = GroupExpr> {
        prop_oneof![
            (1u64..1000).prop_map(Atom::Cyclic),
            (2u64..50, 1u64..6).prop_map(|(p, k)| Atom::ElementaryAbelian(p, k)),
            (2u64..50, 1u64..6).prop_map(|(m, k)| Atom::Homocyclic(m, k)),
            (1u64..500).prop_map(|n| Atom::Dihedral(2 * n)),
            Just(Atom::Quaternion8),
            (2u64..8, any::<bool>())
                .prop_map(|(p, s)| Atom::Extraspecial(p, if s { Sign::Plus } else { Sign::Minus })),
            Just(Atom::SL23),
            Just(Atom::Sz8Borel),
            Just(Atom::Alt5),
        ]
        .prop_map(GroupExpr::Atom)
    }

    fn module() -> impl Strategy<Value = ModuleSpec> {
        prop::collection::vec((2u64..30, 1u32..4), 1..6)
            .prop_map(|factors| ModuleSpec::new(factors).unwrap())
    }

    fn action() -> impl Strategy<Value = ActionSpec> {
        let matrix = (1usize..3).prop_flat_map(|r| {
            prop::collection::vec(prop::collection::vec(0u64..20, r), r)
        });
        prop_oneof![
            Just(ActionSpec::Trivial),
            Just(ActionSpec::MaximalKernels),
            prop::collection::vec(prop::collection::vec(matrix, 1..3), 1..3)
                .prop_map(ActionSpec::ExplicitMatrices),
        ]
    }

    fn expr() -> impl Strategy<Value = GroupExpr> {
        atom().prop_recursive(3, 12, 3, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 2..4).prop_map(GroupExpr::direct),
                (module(), inner, action()).prop_map(|(module, actor, action)| GroupExpr::Sdp {
                    module,
                    actor: Box::new(actor),
                    action,
                }),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn print_then_parse_is_identity(e in expr()) {
            let text = e.to_string();
            prop_assert!(!text.contains(char::is_whitespace));
            prop_assert_eq!(parse_group_expr(&text).unwrap(), e);
        }
    }

    #[test]
    fn canonical_examples() {
        let e = parse_group_expr("sdp( 3^3 , ES(2,-), maxker )").unwrap();
        assert_eq!(e.to_string(), "sdp(3^3,ES(2,-),maxker)");
        assert_eq!(e.order(), Some(216));
        assert_eq!(parse_group_expr("C(6)").unwrap(), GroupExpr::Atom(Atom::Cyclic(6)));
        let e = parse_group_expr("sdp(7^4, ES(3,+), maxker)").unwrap();
        assert_eq!(e.order(), Some(64827));
        let e = parse_group_expr("sdp((2x2)^4,ES(3,+),maxker)").unwrap();
        assert_eq!(e.order(), Some(6912));
        assert_eq!(parse_group_expr("sdp(7x7^2,C(3),trivial)").unwrap().to_string(), "sdp(7^3,C(3),trivial)");
    }

    #[test]
    fn builds_match_expression_orders() {
        for text in ["C(6)*Q8", "sdp(3^3,ES(2,+),maxker)", "D(10)", "sdp(3^2,C(2),mats({[2],[2]}))"] {
            let e = parse_group_expr(text).unwrap();
            assert_eq!(e.build(100_000).unwrap().order() as u64, e.order().unwrap(), "{text}");
        }
    }

    #[test]
    fn oversized_expressions_are_refused_before_building() {
        let e = parse_group_expr("sdp(101^3,Q8,maxker)").unwrap();
        assert!(matches!(e.build(1000), Err(crate::Error::BoundExceeded { bound: 1000 })));
    }
}
