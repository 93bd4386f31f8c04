//! Declarative problem description: geometry, materials, boundaries,
//! discretization, the stress surface and the source basis.
//!
//! Scenes are built programmatically or parsed from a TOML scenario file
//! (schema documented in the repository README, examples under
//! `scenarios/`). A parsed scene is fully validated and immutable.

mod material;
mod raster;
mod shape;

pub use material::{epsilon_at, rad_s_to_internal, LorentzTerm, MaterialKind, MaterialModel};
pub use raster::{pixel_material_grid, rasterize, ComponentGrid, RasterGrid, COMP_OFFSETS};
pub use shape::{Axis2, Object, Shape, Side};

use serde::{Deserialize, Serialize};

use crate::error::SceneError;

/// Dimensionality / symmetry mode of the computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    /// Plain two-dimensional electromagnetism, standard kernel.
    #[serde(rename = "2d")]
    TwoD,
    /// Three-dimensional, translation-invariant in z, perfect conductors
    /// only; solved as a 2D problem with the closed-form kernel.
    #[serde(rename = "z-invariant")]
    ZInvariant,
    /// 2D cross-section with an out-of-plane Bloch wavevector k_z
    /// (complex fields, k_z quadrature at assembly).
    #[serde(rename = "2d-kz")]
    TwoDKz,
    /// Cylindrically symmetric (r, z) with azimuthal index m.
    #[serde(rename = "cylindrical")]
    Cylindrical,
}

/// Which 2D polarization families to run (planar modes only; the k_z and
/// cylindrical modes always couple all components).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolMode {
    Tm,
    Te,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundaryKind {
    Pec,
    Pmc,
    /// Perfectly matched layer of the given pixel thickness, PEC-backed.
    Pml(u32),
    /// Bloch-periodic wrap; the phase comes from the job's wavevector.
    Periodic,
}

impl BoundaryKind {
    pub fn pml_cells(&self) -> u32 {
        match self {
            BoundaryKind::Pml(n) => *n,
            _ => 0,
        }
    }

    fn to_token(self) -> String {
        match self {
            BoundaryKind::Pec => "pec".into(),
            BoundaryKind::Pmc => "pmc".into(),
            BoundaryKind::Pml(n) => format!("pml:{n}"),
            BoundaryKind::Periodic => "periodic".into(),
        }
    }

    fn from_token(s: &str) -> Result<Self, SceneError> {
        match s {
            "pec" => Ok(BoundaryKind::Pec),
            "pmc" => Ok(BoundaryKind::Pmc),
            "periodic" => Ok(BoundaryKind::Periodic),
            other => {
                if let Some(rest) = other.strip_prefix("pml:") {
                    let n: u32 = rest
                        .parse()
                        .map_err(|_| SceneError::Parse(format!("bad pml thickness '{rest}'")))?;
                    Ok(BoundaryKind::Pml(n))
                } else if other == "pml" {
                    Ok(BoundaryKind::Pml(8))
                } else {
                    Err(SceneError::Parse(format!(
                        "boundary '{other}' (expected pec|pmc|periodic|pml:N)"
                    )))
                }
            }
        }
    }
}

/// Boundary condition on each cell edge. In cylindrical mode the x
/// direction is r and `x_min` is the symmetry axis (set automatically).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Boundaries {
    pub x_min: BoundaryKind,
    pub x_max: BoundaryKind,
    pub y_min: BoundaryKind,
    pub y_max: BoundaryKind,
}

impl Default for Boundaries {
    fn default() -> Self {
        let pml = BoundaryKind::Pml(8);
        Boundaries { x_min: pml, x_max: pml, y_min: pml, y_max: pml }
    }
}

impl Boundaries {
    pub fn all(kind: BoundaryKind) -> Self {
        Boundaries { x_min: kind, x_max: kind, y_min: kind, y_max: kind }
    }

    pub fn edges(&self) -> [BoundaryKind; 4] {
        [self.x_min, self.x_max, self.y_min, self.y_max]
    }
}

/// Rectangular stress surface (a contour in the simulation plane).
/// In cylindrical mode the r_min edge degenerates onto the axis and is
/// not a face; set `center[0] = half_size[0]` so the contour starts at r=0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub center: [f64; 2],
    pub half_size: [f64; 2],
}

/// Source-basis and quadrature controls.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisSpec {
    /// Highest cosine order per face (inclusive).
    pub max_n: usize,
    /// Highest azimuthal index (inclusive, cylindrical mode).
    pub max_m: usize,
    /// Gauss-Legendre node count for the k_z integral (2d-kz mode).
    pub kz_nodes: usize,
    /// Scale of the tangent map for k_z.
    pub kz_scale: f64,
    /// Hard truncation of the k_z integral.
    pub kz_cutoff: f64,
    /// Node count for the k_x Brillouin-zone integral (periodic x).
    pub kx_nodes: usize,
    /// Force components to assemble (0 = x/r, 1 = y/z).
    pub force_axes: Vec<usize>,
}

impl Default for BasisSpec {
    fn default() -> Self {
        BasisSpec {
            max_n: 8,
            max_m: 2,
            kz_nodes: 8,
            kz_scale: 1.0,
            kz_cutoff: 30.0,
            kx_nodes: 1,
            force_axes: vec![0],
        }
    }
}

/// The full declarative problem statement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneSpec {
    pub mode: Mode,
    pub polarizations: PolMode,
    /// Cell extent in units of a: `[Lx, Ly]` (cylindrical: `[R, Lz]`).
    pub cell: [f64; 2],
    /// Pixels per unit length a.
    pub resolution: u32,
    /// Uniform dissipation, units c/a.
    pub sigma: f64,
    /// Physical size of a in micrometres (material unit conversion).
    pub length_scale_um: f64,
    /// Background material name.
    pub background: String,
    pub materials: Vec<MaterialModel>,
    pub objects: Vec<Object>,
    pub boundaries: Boundaries,
    pub surface: SurfaceSpec,
    pub basis: BasisSpec,
}

impl SceneSpec {
    /// Cell origin: symmetric in y (and x for planar modes); r starts at 0.
    pub fn origin(&self) -> [f64; 2] {
        match self.mode {
            Mode::Cylindrical => [0.0, -0.5 * self.cell[1]],
            _ => [-0.5 * self.cell[0], -0.5 * self.cell[1]],
        }
    }

    pub fn dx(&self) -> f64 {
        1.0 / self.resolution as f64
    }

    /// Pixel counts along x and y.
    pub fn pixels(&self) -> (usize, usize) {
        let r = self.resolution as f64;
        (
            (self.cell[0] * r).round() as usize,
            (self.cell[1] * r).round() as usize,
        )
    }

    pub fn material(&self, name: &str) -> Result<&MaterialModel, SceneError> {
        self.materials
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| SceneError::UnknownMaterial(name.to_string()))
    }

    /// Vacuum cell of the given size with library materials registered.
    pub fn empty(mode: Mode, cell: [f64; 2], resolution: u32) -> Self {
        SceneSpec {
            mode,
            polarizations: PolMode::Both,
            cell,
            resolution,
            sigma: 1.0,
            length_scale_um: 1.0,
            background: "vacuum".into(),
            materials: vec![
                MaterialModel::vacuum(),
                MaterialModel::pec(),
                MaterialModel::pmc(),
            ],
            objects: Vec::new(),
            boundaries: Boundaries::default(),
            surface: SurfaceSpec { center: [0.0, 0.0], half_size: [0.25 * cell[0], 0.25 * cell[1]] },
            basis: BasisSpec::default(),
        }
    }

    pub fn validate(&self) -> Result<(), SceneError> {
        let fail = |msg: String| Err(SceneError::Validation(msg));
        if self.resolution < 8 {
            return fail(format!("resolution {} < 8", self.resolution));
        }
        if !(self.sigma >= 0.0) {
            return fail(format!("sigma = {} < 0", self.sigma));
        }
        if !(self.cell[0] > 0.0 && self.cell[1] > 0.0) {
            return fail("cell extents must be positive".into());
        }
        for m in &self.materials {
            m.validate()?;
        }
        self.material(&self.background)?;
        for o in &self.objects {
            self.material(&o.material)?;
            if matches!(o.shape, Shape::SphereSegment { .. }) && self.mode != Mode::Cylindrical {
                return fail(format!("object '{}': sphere segments need cylindrical mode", o.name));
            }
            if matches!(o.shape, Shape::Circle { .. }) && self.mode == Mode::Cylindrical {
                return fail(format!(
                    "object '{}': a circle revolves into a torus; not supported",
                    o.name
                ));
            }
        }
        for b in self.boundaries.edges() {
            if let BoundaryKind::Pml(n) = b {
                if n < 4 {
                    return fail(format!("pml thickness {n} px < 4"));
                }
            }
        }
        if self.mode == Mode::Cylindrical && self.boundaries.x_min != BoundaryKind::Pec {
            // r_min is the axis; stored as Pec but treated specially.
            return fail("cylindrical mode: x_min boundary is the axis (set to 'pec')".into());
        }
        if (self.boundaries.x_min == BoundaryKind::Periodic)
            != (self.boundaries.x_max == BoundaryKind::Periodic)
        {
            return fail("periodic boundaries must pair x_min with x_max".into());
        }
        if self.boundaries.y_min == BoundaryKind::Periodic
            || self.boundaries.y_max == BoundaryKind::Periodic
        {
            return fail("periodic y boundaries are not supported".into());
        }
        if self.mode == Mode::ZInvariant {
            for o in &self.objects {
                if !matches!(
                    self.material(&o.material)?.kind,
                    MaterialKind::Vacuum | MaterialKind::Pec | MaterialKind::Pmc
                ) {
                    return fail(format!(
                        "z-invariant mode allows only vacuum and perfect conductors, object '{}' is neither",
                        o.name
                    ));
                }
            }
            if self.material(&self.background)?.kind != MaterialKind::Vacuum {
                return fail("z-invariant mode requires a vacuum background".into());
            }
        }
        self.validate_surface()?;
        Ok(())
    }

    /// Effective material at a point (painter's order; background last).
    pub fn material_at(&self, p: [f64; 2]) -> &MaterialModel {
        for o in self.objects.iter().rev() {
            if o.shape.contains(p) {
                return self.material(&o.material).expect("validated");
            }
        }
        self.material(&self.background).expect("validated")
    }

    /// Name of the topmost object covering `p` with a material different
    /// from the background, if any.
    fn solid_at(&self, p: [f64; 2]) -> Option<&str> {
        for o in self.objects.iter().rev() {
            if o.shape.contains(p) {
                if o.material == self.background {
                    return None;
                }
                return Some(&o.name);
            }
        }
        None
    }

    fn validate_surface(&self) -> Result<(), SceneError> {
        let fail = |msg: String| Err(SceneError::Validation(msg));
        let s = &self.surface;
        if !(s.half_size[0] > 0.0 && s.half_size[1] > 0.0) {
            return fail("surface half_size must be positive".into());
        }
        let origin = self.origin();
        let dx = self.dx();
        let lo = [s.center[0] - s.half_size[0], s.center[1] - s.half_size[1]];
        let hi = [s.center[0] + s.half_size[0], s.center[1] + s.half_size[1]];
        // PML slabs plus one pixel of clearance
        let pml = |b: BoundaryKind| b.pml_cells() as f64 * dx;
        let min_x = origin[0] + pml(self.boundaries.x_min) + dx;
        let max_x = origin[0] + self.cell[0] - pml(self.boundaries.x_max) - dx;
        let min_y = origin[1] + pml(self.boundaries.y_min) + dx;
        let max_y = origin[1] + self.cell[1] - pml(self.boundaries.y_max) - dx;
        let cyl = self.mode == Mode::Cylindrical;
        let r0_face_on_axis = cyl && lo[0].abs() < 1e-9;
        if (!r0_face_on_axis && lo[0] < min_x) || hi[0] > max_x || lo[1] < min_y || hi[1] > max_y {
            return fail(format!(
                "surface [{:?}..{:?}] is not strictly inside the cell interior (PML excluded)",
                lo, hi
            ));
        }
        if cyl && lo[0] < 0.0 {
            return fail("surface extends to negative r".into());
        }
        // faces must not touch any object: sample densely along the contour
        let nsamp = (4.0 * (s.half_size[0] + s.half_size[1]) / dx).ceil() as usize * 2 + 8;
        for k in 0..nsamp {
            let t = k as f64 / (nsamp - 1) as f64;
            let perim: [[f64; 2]; 4] = [
                [lo[0] + t * (hi[0] - lo[0]), lo[1]],
                [lo[0] + t * (hi[0] - lo[0]), hi[1]],
                [lo[0], lo[1] + t * (hi[1] - lo[1])],
                [hi[0], lo[1] + t * (hi[1] - lo[1])],
            ];
            for (fi, p) in perim.iter().enumerate() {
                if cyl && fi == 2 && r0_face_on_axis {
                    continue; // the axis edge is not a face
                }
                if let Some(name) = self.solid_at(*p) {
                    return fail(format!(
                        "surface touches object '{name}' at ({:.3}, {:.3})",
                        p[0], p[1]
                    ));
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------
// TOML scenario files
// ---------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    scene: ScenarioScene,
    #[serde(default)]
    boundaries: Option<ScenarioBoundaries>,
    #[serde(default)]
    materials: Vec<ScenarioMaterial>,
    #[serde(default)]
    objects: Vec<Object>,
    surface: SurfaceSpec,
    #[serde(default)]
    basis: Option<BasisSpec>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioScene {
    mode: Mode,
    #[serde(default = "default_pol")]
    polarizations: PolMode,
    cell: [f64; 2],
    resolution: u32,
    #[serde(default = "default_sigma")]
    sigma: f64,
    #[serde(default = "default_scale")]
    length_scale_um: f64,
    #[serde(default = "default_background")]
    background: String,
}

fn default_pol() -> PolMode {
    PolMode::Both
}
fn default_sigma() -> f64 {
    1.0
}
fn default_scale() -> f64 {
    1.0
}
fn default_background() -> String {
    "vacuum".into()
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioBoundaries {
    #[serde(default = "default_edge")]
    x_min: String,
    #[serde(default = "default_edge")]
    x_max: String,
    #[serde(default = "default_edge")]
    y_min: String,
    #[serde(default = "default_edge")]
    y_max: String,
}

fn default_edge() -> String {
    "pml:8".into()
}

/// Raw material entry: either a library name or an inline definition.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum ScenarioMaterial {
    Library { library: String },
    Inline(MaterialModel),
}

/// Parse and validate a TOML scenario document.
pub fn parse_scene(document: &str) -> Result<SceneSpec, SceneError> {
    let raw: ScenarioFile =
        toml::from_str(document).map_err(|e| SceneError::Parse(e.to_string()))?;
    let scale = raw.scene.length_scale_um;
    let mut materials = vec![
        MaterialModel::vacuum(),
        MaterialModel::pec(),
        MaterialModel::pmc(),
    ];
    for m in raw.materials {
        let model = match m {
            ScenarioMaterial::Library { library } => match library.as_str() {
                "silicon" => MaterialModel::silicon(scale, false),
                "silicon-swapped" => MaterialModel::silicon(scale, true),
                "silica" => MaterialModel::silica(scale),
                other => {
                    return Err(SceneError::Parse(format!(
                        "unknown library material '{other}' (silicon|silicon-swapped|silica)"
                    )))
                }
            },
            ScenarioMaterial::Inline(m) => m,
        };
        if materials.iter().any(|e| e.name == model.name) {
            return Err(SceneError::Parse(format!("duplicate material '{}'", model.name)));
        }
        materials.push(model);
    }
    let b = raw.boundaries.unwrap_or(ScenarioBoundaries {
        x_min: default_edge(),
        x_max: default_edge(),
        y_min: default_edge(),
        y_max: default_edge(),
    });
    let mut boundaries = Boundaries {
        x_min: BoundaryKind::from_token(&b.x_min)?,
        x_max: BoundaryKind::from_token(&b.x_max)?,
        y_min: BoundaryKind::from_token(&b.y_min)?,
        y_max: BoundaryKind::from_token(&b.y_max)?,
    };
    if raw.scene.mode == Mode::Cylindrical {
        boundaries.x_min = BoundaryKind::Pec; // the axis
    }
    let mut basis = raw.basis.unwrap_or_default();
    if basis.force_axes.is_empty() {
        basis.force_axes = match raw.scene.mode {
            Mode::Cylindrical => vec![1],
            _ => vec![0],
        };
    }
    let spec = SceneSpec {
        mode: raw.scene.mode,
        polarizations: raw.scene.polarizations,
        cell: raw.scene.cell,
        resolution: raw.scene.resolution,
        sigma: raw.scene.sigma,
        length_scale_um: scale,
        background: raw.scene.background,
        materials,
        objects: raw.objects,
        boundaries,
        surface: raw.surface,
        basis,
    };
    spec.validate()?;
    Ok(spec)
}

/// Serialize a scene back to scenario-file TOML (round-trips through
/// [`parse_scene`] up to library-material expansion, which is stable).
pub fn scene_to_toml(spec: &SceneSpec) -> String {
    let file = ScenarioFile {
        scene: ScenarioScene {
            mode: spec.mode,
            polarizations: spec.polarizations,
            cell: spec.cell,
            resolution: spec.resolution,
            sigma: spec.sigma,
            length_scale_um: spec.length_scale_um,
            background: spec.background.clone(),
        },
        boundaries: Some(ScenarioBoundaries {
            x_min: spec.boundaries.x_min.to_token(),
            x_max: spec.boundaries.x_max.to_token(),
            y_min: spec.boundaries.y_min.to_token(),
            y_max: spec.boundaries.y_max.to_token(),
        }),
        materials: spec
            .materials
            .iter()
            .filter(|m| !matches!(m.name.as_str(), "vacuum" | "pec" | "pmc"))
            .cloned()
            .map(ScenarioMaterial::Inline)
            .collect(),
        objects: spec.objects.clone(),
        surface: spec.surface.clone(),
        basis: Some(spec.basis.clone()),
    };
    toml::to_string_pretty(&file).expect("scene serialization cannot fail")
}

pub mod presets;
