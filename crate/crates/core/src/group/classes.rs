use serde::Serialize;

use super::{Elem, FiniteGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Class {
    /// Least element encoding in the class.
    pub representative: Elem,
    pub size: usize,
    pub centralizer_order: usize,
}

/// Conjugacy classes ordered by ascending size, then by representative.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    classes: Vec<Class>,
    class_of: Vec<u32>,
    inverse_class: Vec<usize>,
    identity_class: usize,
}

impl ConjugacyClasses {
    /// Orbits under conjugation by the group's fixed generating set.
    pub fn compute(g: &FiniteGroup) -> Self {
        let n = g.order();
        const UNSEEN: u32 = u32::MAX;
        let mut raw_of = vec![UNSEEN; n];
        let mut raw: Vec<(usize, Elem)> = Vec::new();
        let gens: Vec<(Elem, Elem)> = g.generators().iter().map(|&s| (s, g.inv(s))).collect();
        let mut queue = Vec::new();
        for x in g.elements() {
            if raw_of[x as usize] != UNSEEN {
                continue;
            }
            let id = raw.len() as u32;
            raw_of[x as usize] = id;
            queue.push(x);
            let mut size = 1;
            while let Some(y) = queue.pop() {
                for &(s, si) in &gens {
                    let z = g.mul(g.mul(s, y), si);
                    if raw_of[z as usize] == UNSEEN {
                        raw_of[z as usize] = id;
                        size += 1;
                        queue.push(z);
                    }
                }
            }
            raw.push((size, x));
        }

        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by_key(|&i| raw[i]);
        let mut remap = vec![0u32; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new as u32;
        }
        let class_of: Vec<u32> = raw_of.iter().map(|&c| remap[c as usize]).collect();
        let classes: Vec<Class> = order
            .iter()
            .map(|&i| Class {
                representative: raw[i].1,
                size: raw[i].0,
                centralizer_order: n / raw[i].0,
            })
            .collect();
        let inverse_class = classes
            .iter()
            .map(|c| class_of[g.inv(c.representative) as usize] as usize)
            .collect();
        let identity_class = class_of[g.identity() as usize] as usize;
        ConjugacyClasses {
            classes,
            class_of,
            inverse_class,
            identity_class,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Class] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &Class {
        &self.classes[i]
    }

    #[inline]
    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x as usize] as usize
    }

    /// Index of the class containing the inverses of class `i`.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }

    pub fn identity_class(&self) -> usize {
        self.identity_class
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    /// Elements of every class, in increasing encoding.
    pub fn members(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.classes.len()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(x as Elem);
        }
        out
    }
}
