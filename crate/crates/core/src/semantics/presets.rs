//! Built-in example structures.

use super::{Assignment, Model};

pub const SOCRATES: &str = "Sócrates";
pub const PLATO: &str = "Platão";
pub const ARISTOTLE: &str = "Aristóteles";
pub const KANT: &str = "Kant";

/// Four philosophers. `Filosofo` holds of everyone, `Grego` of all but
/// Kant, `Mestre(x, y)` when x taught y, `Discipulo(x, y)` when x was a
/// pupil of y. Each philosopher is also named by a lowercase ASCII constant.
pub fn philosophers() -> Model {
    let everyone = [SOCRATES, PLATO, ARISTOTLE, KANT];
    Model::builder(everyone)
        .property("Filosofo", everyone)
        .property("Grego", [SOCRATES, PLATO, ARISTOTLE])
        .predicate("Mestre", 2, [[SOCRATES, PLATO], [PLATO, ARISTOTLE]])
        .predicate("Discipulo", 2, [[PLATO, SOCRATES], [ARISTOTLE, PLATO]])
        .constant("socrates", SOCRATES)
        .constant("platao", PLATO)
        .constant("aristoteles", ARISTOTLE)
        .constant("kant", KANT)
        .build()
        .expect("static model")
}

/// The four sample sequences f¹..f⁴, fixed on `x1..x5`. Every later index
/// maps to Sócrates.
pub fn philosophers_sequences() -> [Assignment; 4] {
    [
        [SOCRATES, PLATO, ARISTOTLE, PLATO, PLATO],
        [SOCRATES, SOCRATES, KANT, ARISTOTLE, KANT],
        [ARISTOTLE, PLATO, SOCRATES, KANT, SOCRATES],
        [PLATO, ARISTOTLE, PLATO, ARISTOTLE, ARISTOTLE],
    ]
    .map(|row| Assignment::from_prefix(row, SOCRATES))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Variable;

    #[test]
    fn table_lookups() {
        let [f1, _, f3, _] = philosophers_sequences();
        assert_eq!(f1.lookup(Variable::new(3)), ARISTOTLE);
        assert_eq!(f3.lookup(Variable::new(4)), KANT);
        assert_eq!(f3.lookup(Variable::new(9)), SOCRATES);
    }

    #[test]
    fn pupil_relation() {
        let m = philosophers();
        let ext = m.extension("Discipulo").unwrap();
        assert!(ext.contains(&vec![PLATO, SOCRATES]));
        assert!(!ext.contains(&vec![PLATO, ARISTOTLE]));
    }
}
