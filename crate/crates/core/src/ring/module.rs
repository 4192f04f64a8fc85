use std::fmt;
use std::sync::Arc;

use super::{Construction, Ring};
use crate::error::{Error, Result};

struct ModuleData {
    ring: Ring,
    size: usize,
    zero: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    // ring.size() x size, row r holds r·m for every m
    action: Vec<u32>,
    cyclic_order: Option<usize>,
}

/// A finite left module over a [`Ring`], stored as explicit tables.
#[derive(Clone)]
pub struct Module(Arc<ModuleData>);

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Module")
            .field("size", &self.0.size)
            .field("ring_size", &self.0.ring.size())
            .field("cyclic_order", &self.0.cyclic_order)
            .finish()
    }
}

impl Module {
    /// `Z_m` as a module over `Z_n`, which needs `m | n`. The action is
    /// `r·x = (r mod m)·x`.
    pub fn cyclic(ring: &Ring, m: usize) -> Result<Module> {
        let Construction::Zn(n) = *ring.construction() else {
            return Err(Error::InvalidModule("cyclic modules are defined over Z_n only".into()));
        };
        if m < 1 || n % m != 0 {
            return Err(Error::InvalidModule(format!("Z_{m} is not a Z_{n}-module ({m} does not divide {n})")));
        }
        let add = (0..m).flat_map(|a| (0..m).map(move |b| ((a + b) % m) as u32)).collect();
        let neg = (0..m).map(|a| ((m - a) % m) as u32).collect();
        let action = (0..n).flat_map(|r| (0..m).map(move |x| ((r * x) % m) as u32)).collect();
        let mut module = Module::from_tables(ring, m, add, neg, action)?;
        Arc::get_mut(&mut module.0).expect("fresh module").cyclic_order = Some(m);
        Ok(module)
    }

    /// A module from explicit tables: `add` and `neg` on the carrier and
    /// `action[r * size + m] = r·m`. All module axioms are checked.
    pub fn from_tables(ring: &Ring, size: usize, add: Vec<u32>, neg: Vec<u32>, action: Vec<u32>) -> Result<Module> {
        if size == 0 || add.len() != size * size || neg.len() != size || action.len() != ring.size() * size {
            return Err(Error::InvalidModule("table dimensions do not match".into()));
        }
        if add.iter().chain(&neg).chain(&action).any(|&v| v as usize >= size) {
            return Err(Error::InvalidModule("table entry out of range".into()));
        }
        let zero = (0..size)
            .find(|&z| (0..size).all(|a| add[z * size + a] as usize == a))
            .ok_or_else(|| Error::InvalidModule("no additive identity".into()))?;
        let module = Module(Arc::new(ModuleData {
            ring: ring.clone(),
            size,
            zero,
            add,
            neg,
            action,
            cyclic_order: None,
        }));
        module.validate()?;
        Ok(module)
    }

    fn validate(&self) -> Result<()> {
        let n = self.size();
        let fail = |what: String| Err(Error::InvalidModule(what));
        for a in 0..n {
            if self.add(a, self.neg(a)) != self.zero() {
                return fail(format!("{a} + (-{a}) is not zero"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail(format!("addition not commutative at ({a},{b})"));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail(format!("addition not associative at ({a},{b},{c})"));
                    }
                }
            }
        }
        let ring = &self.0.ring;
        let gens = ring.additive_gens();
        for r in ring.elements() {
            for &g in gens {
                let rg = ring.add(r, g);
                for m in 0..n {
                    if self.act(rg, m) != self.add(self.act(r, m), self.act(g, m)) {
                        return fail(format!("(r+s)m != rm + sm at r={r}, s={g}, m={m}"));
                    }
                }
            }
            for m in 0..n {
                for m2 in 0..n {
                    if self.act(r, self.add(m, m2)) != self.add(self.act(r, m), self.act(r, m2)) {
                        return fail(format!("r(m+n) != rm + rn at r={r}, m={m}, n={m2}"));
                    }
                }
            }
        }
        for &g in gens {
            for &h in gens {
                let gh = ring.mul(g, h);
                for m in 0..n {
                    if self.act(gh, m) != self.act(g, self.act(h, m)) {
                        return fail(format!("(rs)m != r(sm) at r={g}, s={h}, m={m}"));
                    }
                }
            }
        }
        if let Some(one) = ring.one() {
            if let Some(m) = (0..n).find(|&m| self.act(one, m) != m) {
                return fail(format!("1·{m} != {m}"));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn zero(&self) -> usize {
        self.0.zero
    }

    /// `Some(m)` when built by [`Module::cyclic`].
    pub fn cyclic_order(&self) -> Option<usize> {
        self.0.cyclic_order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.0.add[a * self.0.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.0.neg[a] as usize
    }

    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.0.action[r * self.0.size + m] as usize
    }

    /// All submodules, each as a sorted list of carrier elements.
    pub fn submodules(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let close = |seed: &[usize]| -> Vec<bool> {
            let mut inside = vec![false; n];
            let mut stack: Vec<usize> = seed.to_vec();
            stack.push(self.zero());
            while let Some(x) = stack.pop() {
                if inside[x] {
                    continue;
                }
                inside[x] = true;
                for y in 0..n {
                    if inside[y] {
                        stack.push(self.add(x, y));
                    }
                }
                stack.push(self.neg(x));
                for r in self.ring().elements() {
                    stack.push(self.act(r, x));
                }
            }
            inside
        };
        let mut found: Vec<Vec<bool>> = Vec::new();
        let mut frontier: Vec<Vec<bool>> = Vec::new();
        for m in 0..n {
            let s = close(&[m]);
            if !found.contains(&s) {
                found.push(s.clone());
                frontier.push(s);
            }
        }
        while let Some(s) = frontier.pop() {
            let mut new = Vec::new();
            for t in &found {
                let seed: Vec<usize> = (0..n).filter(|&i| s[i] || t[i]).collect();
                let u = close(&seed);
                if !found.contains(&u) && !new.contains(&u) {
                    new.push(u);
                }
            }
            for u in new {
                found.push(u.clone());
                frontier.push(u);
            }
        }
        let mut out: Vec<Vec<usize>> = found
            .into_iter()
            .map(|s| (0..n).filter(|&i| s[i]).collect())
            .collect();
        out.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }
}
