pub mod bridge;
pub mod first;
pub mod reduced;
pub mod second;

pub use bridge::{first_as_second, Bridge};
pub use first::{AdjointCorruption, FirstTits};
pub use reduced::ReducedAlbert;
pub use second::SecondTits;

use std::sync::Arc;

use crate::cubic::{CubicForm, CubicNormStructure};

/// A construction together with its cubic norm structure.
#[derive(Debug)]
pub struct Built<T> {
    pub form: Arc<T>,
    pub structure: Arc<CubicNormStructure>,
}

impl<T> Clone for Built<T> {
    fn clone(&self) -> Self {
        Built {
            form: self.form.clone(),
            structure: self.structure.clone(),
        }
    }
}

impl<T: CubicForm + 'static> Built<T> {
    pub fn new(form: T) -> Self {
        let form = Arc::new(form);
        let structure = CubicNormStructure::new(form.clone());
        Built { form, structure }
    }
}
