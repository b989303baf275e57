pub mod catalog;
pub mod coxeter;
pub mod dual;
pub mod error;
pub mod mesh;
pub mod orbit;
pub mod par;
pub mod parse;
pub mod polyhedron;
pub mod quaternion;
pub mod report;
pub mod tolerance;
pub mod verify;
