//! The built-in checks.

pub mod basics;
pub mod frobenius;
pub mod geometry;
pub mod hp;
pub mod lemma;
pub mod sphere;

use crate::Check;

pub fn builtin() -> Vec<Box<dyn Check>> {
    vec![
        Box::new(basics::Catalan),
        Box::new(basics::JonesWenzl),
        Box::new(basics::Closure),
        Box::new(basics::Presentation),
        Box::new(basics::Hopf),
        Box::new(lemma::Uvkm),
        Box::new(sphere::SphereSlide),
        Box::new(frobenius::Frobenius),
        Box::new(frobenius::Threading),
        Box::new(hp::HostePrzytycki),
        Box::new(geometry::Cutting),
        Box::new(geometry::HH0),
        Box::new(geometry::CoreLoop),
        Box::new(geometry::Disk),
        Box::new(geometry::Inversion),
    ]
}
