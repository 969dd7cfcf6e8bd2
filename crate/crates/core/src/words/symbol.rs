use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

/// An interned generator name.
///
/// `u`, `v`, `x`, `y`, `h` are interned first so their ids are stable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u32);

struct Interner {
    names: Vec<&'static str>,
    ids: HashMap<&'static str, u32>,
}

fn interner() -> &'static RwLock<Interner> {
    static INTERNER: OnceLock<RwLock<Interner>> = OnceLock::new();
    INTERNER.get_or_init(|| {
        let mut i = Interner {
            names: Vec::new(),
            ids: HashMap::new(),
        };
        for name in ["u", "v", "x", "y", "h"] {
            i.names.push(name);
            i.ids.insert(name, i.names.len() as u32 - 1);
        }
        RwLock::new(i)
    })
}

impl Symbol {
    pub const U: Symbol = Symbol(0);
    pub const V: Symbol = Symbol(1);
    pub const X: Symbol = Symbol(2);
    pub const Y: Symbol = Symbol(3);
    pub const H: Symbol = Symbol(4);

    pub fn intern(name: &str) -> Symbol {
        if let Some(&id) = interner().read().unwrap().ids.get(name) {
            return Symbol(id);
        }
        let mut w = interner().write().unwrap();
        if let Some(&id) = w.ids.get(name) {
            return Symbol(id);
        }
        // generator names are few and live for the whole program
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        w.names.push(leaked);
        let id = w.names.len() as u32 - 1;
        w.ids.insert(leaked, id);
        Symbol(id)
    }

    pub fn name(self) -> &'static str {
        interner().read().unwrap().names[self.0 as usize]
    }

    pub fn is_identifier(s: &str) -> bool {
        let mut chars = s.chars();
        matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
            && chars.all(|c| c.is_alphanumeric() || c == '_')
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_ids() {
        assert_eq!(Symbol::intern("x"), Symbol::X);
        assert_eq!(Symbol::V.name(), "v");
        let g = Symbol::intern("gamma_1");
        assert_eq!(Symbol::intern("gamma_1"), g);
        assert_ne!(g, Symbol::H);
    }
}
