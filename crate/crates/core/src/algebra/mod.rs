pub mod assoc;
pub mod degree3;
pub mod involution;
pub mod octonion;
