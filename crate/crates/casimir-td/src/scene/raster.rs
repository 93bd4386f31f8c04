//! Staggered-grid rasterization of a scene.
//!
//! Every field component lives at its own offset inside the pixel; the
//! material is sampled at each component's own position (plain staircase
//! assignment, no subpixel smoothing). Later objects overwrite earlier
//! ones; the background fills the rest.

use ndarray::Array2;

use super::{MaterialKind, MaterialModel, Mode, SceneSpec};
use crate::error::SceneError;

/// Sub-pixel offsets of the six component slots, in grid units:
/// `E0, E1, E2, H0, H1, H2` where 0/1 are the in-plane axes and 2 is the
/// out-of-plane component (z in planar modes, phi in cylindrical mode).
pub const COMP_OFFSETS: [[f64; 2]; 6] = [
    [0.5, 0.0], // E0
    [0.0, 0.5], // E1
    [0.0, 0.0], // E2
    [0.0, 0.5], // H0
    [0.5, 0.0], // H1
    [0.5, 0.5], // H2
];

/// One resolved dispersive material.
#[derive(Debug, Clone)]
pub struct LorentzMaterial {
    pub eps_f: f64,
    pub terms: Vec<super::LorentzTerm>,
}

/// Per-component material grids for one electric component slot.
#[derive(Debug, Clone)]
pub struct ComponentGrid {
    /// Instantaneous permittivity (eps_f for dispersive pixels).
    pub eps: Array2<f64>,
    /// 0 = nondispersive, otherwise 1 + index into `RasterGrid::lorentz`.
    pub lorentz: Array2<u16>,
    pub pec: Array2<bool>,
}

/// The rasterized scene on the staggered grid.
#[derive(Debug, Clone)]
pub struct RasterGrid {
    pub nx: usize,
    pub ny: usize,
    pub dx: f64,
    pub origin: [f64; 2],
    /// Electric component grids, slots E0, E1, E2.
    pub e: [ComponentGrid; 3],
    /// PMC masks at the magnetic component positions, slots H0, H1, H2.
    pub pmc: [Array2<bool>; 3],
    pub lorentz: Vec<LorentzMaterial>,
    /// True when any pixel is dispersive.
    pub has_dispersion: bool,
}

/// Rasterize a validated scene. Deterministic: same spec, same grids.
pub fn rasterize(scene: &SceneSpec) -> Result<RasterGrid, SceneError> {
    scene.validate()?;
    let (nx, ny) = scene.pixels();
    let dx = scene.dx();
    let origin = scene.origin();

    // collect dispersive materials in declaration order
    let mut lorentz: Vec<LorentzMaterial> = Vec::new();
    let mut lorentz_ids: Vec<(String, u16)> = Vec::new();
    for m in &scene.materials {
        if let MaterialKind::Lorentz { eps_f, resonances } = &m.kind {
            lorentz.push(LorentzMaterial { eps_f: *eps_f, terms: resonances.clone() });
            lorentz_ids.push((m.name.clone(), lorentz.len() as u16));
        }
    }
    let lorentz_id = |name: &str| -> u16 {
        lorentz_ids
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, i)| *i)
            .unwrap_or(0)
    };

    let shape = (nx + 1, ny + 1);
    let mut e: Vec<ComponentGrid> = (0..3)
        .map(|_| ComponentGrid {
            eps: Array2::ones(shape),
            lorentz: Array2::zeros(shape),
            pec: Array2::from_elem(shape, false),
        })
        .collect();
    let mut pmc: Vec<Array2<bool>> = (0..3).map(|_| Array2::from_elem(shape, false)).collect();
    let mut has_dispersion = false;

    for slot in 0..6 {
        let off = COMP_OFFSETS[slot];
        for i in 0..=nx {
            for j in 0..=ny {
                let p = [
                    origin[0] + (i as f64 + off[0]) * dx,
                    origin[1] + (j as f64 + off[1]) * dx,
                ];
                let m = scene.material_at(p);
                if slot < 3 {
                    let g = &mut e[slot];
                    match &m.kind {
                        MaterialKind::Vacuum => {}
                        MaterialKind::Pec => g.pec[[i, j]] = true,
                        MaterialKind::Pmc => {}
                        MaterialKind::Dielectric { eps } => g.eps[[i, j]] = *eps,
                        MaterialKind::Lorentz { eps_f, .. } => {
                            g.eps[[i, j]] = *eps_f;
                            g.lorentz[[i, j]] = lorentz_id(&m.name);
                            has_dispersion = true;
                        }
                    }
                } else if m.kind == MaterialKind::Pmc {
                    pmc[slot - 3][[i, j]] = true;
                }
            }
        }
    }

    Ok(RasterGrid {
        nx,
        ny,
        dx,
        origin,
        e: [e.remove(0), e.remove(0), e.remove(0)],
        pmc: [pmc.remove(0), pmc.remove(0), pmc.remove(0)],
        lorentz,
        has_dispersion,
    })
}

/// Material index per pixel (sampled at pixel centres); 0 = background,
/// 1 + object index otherwise. Diagnostic view used by area oracles and
/// the field-snapshot header.
pub fn pixel_material_grid(scene: &SceneSpec) -> Array2<u16> {
    let (nx, ny) = scene.pixels();
    let dx = scene.dx();
    let origin = scene.origin();
    let mut grid = Array2::zeros((nx, ny));
    for i in 0..nx {
        for j in 0..ny {
            let p = [
                origin[0] + (i as f64 + 0.5) * dx,
                origin[1] + (j as f64 + 0.5) * dx,
            ];
            let mut id = 0u16;
            for (oi, o) in scene.objects.iter().enumerate() {
                if o.shape.contains(p) {
                    id = oi as u16 + 1;
                }
            }
            grid[[i, j]] = id;
        }
    }
    grid
}

impl RasterGrid {
    /// Position of component `slot`'s `(i, j)` sample.
    pub fn position(&self, slot: usize, i: usize, j: usize) -> [f64; 2] {
        [
            self.origin[0] + (i as f64 + COMP_OFFSETS[slot][0]) * self.dx,
            self.origin[1] + (j as f64 + COMP_OFFSETS[slot][1]) * self.dx,
        ]
    }
}

impl SceneSpec {
    /// Convenience wrapper.
    pub fn rasterize(&self) -> Result<RasterGrid, SceneError> {
        rasterize(self)
    }

    pub fn mode_is_cylindrical(&self) -> bool {
        self.mode == Mode::Cylindrical
    }
}
