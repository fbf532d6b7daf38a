use super::FiniteGroup;

/// Conjugacy classes in canonical order: the identity class first, the rest
/// by smallest element index. Each class is stored sorted, so its first
/// element is the representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn representative(&self, i: usize) -> usize {
        self.classes[i][0]
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    /// Index of the class of inverses of class `i`.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.classes.iter().map(Vec::as_slice)
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ConjugacyClasses {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut starts: Vec<usize> = std::iter::once(g.identity())
        .chain((0..n).filter(|&x| x != g.identity()))
        .collect();
    starts.dedup();
    for x in starts {
        if class_of[x] != usize::MAX {
            continue;
        }
        let mut class: Vec<usize> = (0..n).map(|h| g.conjugate(h, x)).collect();
        class.sort_unstable();
        class.dedup();
        for &y in &class {
            class_of[y] = classes.len();
        }
        classes.push(class);
    }
    let inverse_class = classes
        .iter()
        .map(|c| class_of[g.inv(c[0])])
        .collect();
    ConjugacyClasses {
        classes,
        class_of,
        inverse_class,
    }
}
