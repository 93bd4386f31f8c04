//! Programmatic scene builders for the geometries exercised by the test
//! and acceptance suites. The shipped scenario files mirror these.

use super::{
    Axis2, Boundaries, BoundaryKind, MaterialModel, Mode, Object, PolMode, SceneSpec, Shape, Side,
    SurfaceSpec,
};

fn pec_object(name: &str, shape: Shape) -> Object {
    Object { name: name.into(), shape, material: "pec".into() }
}

/// Two parallel PEC plates (thickness `th`, transverse width `w`)
/// separated by `gap` along x, inside a PEC-closed cell.
pub fn plates_2d(gap: f64, w: f64, th: f64, margin: f64, resolution: u32) -> SceneSpec {
    let mut s = SceneSpec::empty(
        Mode::TwoD,
        [2.0 * (0.5 * gap + th + margin), w + 2.0 * margin],
        resolution,
    );
    s.boundaries = Boundaries::all(BoundaryKind::Pec);
    let xc = 0.5 * gap + 0.5 * th;
    s.objects = vec![
        pec_object("left", Shape::Rectangle { center: [-xc, 0.0], size: [th, w] }),
        pec_object("right", Shape::Rectangle { center: [xc, 0.0], size: [th, w] }),
    ];
    s.surface = SurfaceSpec {
        center: [-xc, 0.0],
        half_size: [0.5 * th + 0.25 * gap, 0.5 * w + 0.5 * margin],
    };
    s
}

/// The two-cylinder piston: radius `r`, surface-to-surface separation
/// `gap` along x, sidewalls at vertical distance `h` from the cylinder
/// surfaces. `pmc_walls` switches the sidewalls (and the matching cell
/// boundary) from perfect electric to perfect magnetic conductors.
pub fn piston(r: f64, gap: f64, h: f64, pmc_walls: bool, resolution: u32) -> SceneSpec {
    let wall_t = 0.25;
    let margin_x = 1.2;
    let cell_x = 2.0 * (r + 0.5 * gap + r + margin_x);
    let cell_y = 2.0 * (r + h + wall_t);
    let mut s = SceneSpec::empty(Mode::ZInvariant, [cell_x, cell_y], resolution);
    let wall_mat = if pmc_walls { "pmc" } else { "pec" };
    let wall_kind = if pmc_walls { BoundaryKind::Pmc } else { BoundaryKind::Pec };
    s.boundaries = Boundaries {
        x_min: BoundaryKind::Pml(8),
        x_max: BoundaryKind::Pml(8),
        y_min: wall_kind,
        y_max: wall_kind,
    };
    let xc = r + 0.5 * gap;
    let wall_y = r + h + 0.5 * wall_t;
    s.objects = vec![
        pec_object("left", Shape::Circle { center: [-xc, 0.0], radius: r }),
        pec_object("right", Shape::Circle { center: [xc, 0.0], radius: r }),
        Object {
            name: "wall_top".into(),
            shape: Shape::Rectangle { center: [0.0, wall_y], size: [cell_x, wall_t] },
            material: wall_mat.into(),
        },
        Object {
            name: "wall_bottom".into(),
            shape: Shape::Rectangle { center: [0.0, -wall_y], size: [cell_x, wall_t] },
            material: wall_mat.into(),
        },
    ];
    s.surface = SurfaceSpec {
        center: [-xc, 0.0],
        half_size: [r + 0.25 * gap, r + 0.5 * h],
    };
    s.basis.max_n = 4;
    s
}

/// Pair of suspended square dielectric waveguides (side `w`) separated by
/// `gap` along x, open boundaries; k_z integration supplies the third
/// dimension. `material` should name a registered dielectric.
pub fn waveguide_pair(w: f64, gap: f64, resolution: u32, material: &str) -> SceneSpec {
    let margin = 0.8;
    let mut s = SceneSpec::empty(
        Mode::TwoDKz,
        [2.0 * (0.5 * gap + w + margin), w + 2.0 * margin],
        resolution,
    );
    s.materials.push(MaterialModel::silicon(1.0, false));
    let xc = 0.5 * gap + 0.5 * w;
    let mk = |name: &str, x: f64| Object {
        name: name.into(),
        shape: Shape::Rectangle { center: [x, 0.0], size: [w, w] },
        material: material.into(),
    };
    s.objects = vec![mk("left", -xc), mk("right", xc)];
    s.surface = SurfaceSpec {
        center: [-xc, 0.0],
        half_size: [0.5 * w + 0.25 * gap, 0.5 * w + 0.4 * margin],
    };
    s.basis.max_n = 4;
    s.basis.kz_scale = 1.0 / gap.max(0.05);
    s.basis.kz_cutoff = 14.0 / gap.max(0.05);
    s
}

/// Cylindrical piston: two solid PEC cylinders (radius `r`, thickness
/// `th`) facing each other across `gap` along z inside an outer tube at
/// radial clearance `h`.
pub fn cyl_piston(r: f64, gap: f64, h: f64, pmc_tube: bool, resolution: u32) -> SceneSpec {
    let th = 0.5;
    let tube_t = 0.25;
    let zmargin = 1.0;
    let cell_r = r + h + tube_t;
    let cell_z = gap + 2.0 * (th + zmargin);
    let mut s = SceneSpec::empty(Mode::Cylindrical, [cell_r, cell_z], resolution);
    s.boundaries = Boundaries {
        x_min: BoundaryKind::Pec, // axis
        x_max: if pmc_tube { BoundaryKind::Pmc } else { BoundaryKind::Pec },
        y_min: BoundaryKind::Pml(8),
        y_max: BoundaryKind::Pml(8),
    };
    let zc = 0.5 * gap + 0.5 * th;
    s.objects = vec![
        pec_object("top", Shape::Rectangle { center: [0.5 * r, zc], size: [r, th] }),
        pec_object("bottom", Shape::Rectangle { center: [0.5 * r, -zc], size: [r, th] }),
        Object {
            name: "tube".into(),
            shape: Shape::Rectangle {
                center: [r + h + 0.5 * tube_t, 0.0],
                size: [tube_t, cell_z],
            },
            material: if pmc_tube { "pmc" } else { "pec" }.into(),
        },
    ];
    // contour around the top block, touching the axis
    let half_r = 0.5 * (r + 0.5 * h);
    let half_z = 0.5 * th + 0.25 * gap;
    s.surface = SurfaceSpec { center: [half_r, zc], half_size: [half_r, half_z] };
    s.basis.max_n = 2;
    s.basis.max_m = 2;
    s.basis.force_axes = vec![1];
    s
}

/// Sphere-above-indented-plane levitation stage on the symmetry axis:
/// a dielectric sphere (eps 2.02) immersed in fluid (eps 4.30) above a
/// PEC plane with a spherical indentation. `h` is the gap between the
/// sphere surface and the indentation bottom.
pub fn levitation(h: f64, resolution: u32) -> SceneSpec {
    let sphere_r = 0.5;
    let indent_r = 1.0;
    let indent_center_z = 0.5; // indentation bottom at z = -0.5
    let cell_r = 2.0;
    let cell_z = 3.6;
    let mut s = SceneSpec::empty(Mode::Cylindrical, [cell_r, cell_z], resolution);
    s.materials.push(MaterialModel::dielectric("silica-static", 2.02));
    s.materials.push(MaterialModel::dielectric("bromobenzene", 4.30));
    s.background = "bromobenzene".into();
    s.boundaries = Boundaries {
        x_min: BoundaryKind::Pec,
        x_max: BoundaryKind::Pml(8),
        y_min: BoundaryKind::Pec,
        y_max: BoundaryKind::Pml(8),
    };
    let zs = -0.5 + h + sphere_r; // sphere centre
    s.objects = vec![
        pec_object(
            "plane",
            Shape::HalfPlane { axis: Axis2::Y, at: 0.0, side: Side::Below },
        ),
        Object {
            name: "indent".into(),
            shape: Shape::SphereSegment { center_z: indent_center_z, radius: indent_r },
            material: "bromobenzene".into(),
        },
        Object {
            name: "sphere".into(),
            shape: Shape::SphereSegment { center_z: zs, radius: sphere_r },
            material: "silica-static".into(),
        },
    ];
    let half_z = sphere_r + 0.4 * h.min(0.3);
    let half_r = 0.5 * (sphere_r + 0.3 * h.min(0.4));
    s.surface = SurfaceSpec { center: [half_r, zs], half_size: [half_r, half_z] };
    s.basis.max_n = 3;
    s.basis.max_m = 2;
    s.basis.force_axes = vec![1];
    s.polarizations = PolMode::Both;
    s
}

/// Periodic array (period = cell x extent) of dielectric waveguides above
/// a layered substrate, separated by `gap` along y.
pub fn grating(gap: f64, resolution: u32) -> SceneSpec {
    let period = 1.0;
    let wg = [0.5, 0.3]; // waveguide cross-section
    let sub_top = -gap;
    let mut s = SceneSpec::empty(Mode::TwoDKz, [period, 3.0], resolution);
    s.materials.push(MaterialModel::silicon(1.0, false));
    s.materials.push(MaterialModel::silica(1.0));
    s.boundaries = Boundaries {
        x_min: BoundaryKind::Periodic,
        x_max: BoundaryKind::Periodic,
        y_min: BoundaryKind::Pml(8),
        y_max: BoundaryKind::Pml(8),
    };
    s.objects = vec![
        Object {
            name: "substrate".into(),
            shape: Shape::HalfPlane { axis: Axis2::Y, at: sub_top, side: Side::Below },
            material: "silica".into(),
        },
        Object {
            name: "waveguide".into(),
            shape: Shape::Rectangle { center: [0.0, 0.5 * wg[1]], size: wg },
            material: "silicon".into(),
        },
    ];
    s.surface = SurfaceSpec {
        center: [0.0, 0.5 * wg[1]],
        half_size: [0.5 * wg[0] + 0.2 * (period - wg[0]), 0.5 * wg[1] + 0.45 * gap],
    };
    s.basis.max_n = 3;
    s.basis.kx_nodes = 4;
    s.basis.kz_scale = 1.0 / gap.max(0.05);
    s.basis.kz_cutoff = 14.0 / gap.max(0.05);
    s.basis.force_axes = vec![1];
    s
}

/// A single isolated PEC block in an open cell (null-force check).
pub fn single_block(resolution: u32) -> SceneSpec {
    let mut s = SceneSpec::empty(Mode::TwoD, [3.0, 3.0], resolution);
    s.objects = vec![pec_object(
        "block",
        Shape::Rectangle { center: [0.0, 0.0], size: [0.6, 0.6] },
    )];
    s.surface = SurfaceSpec { center: [0.0, 0.0], half_size: [0.55, 0.55] };
    s.basis.max_n = 2;
    s
}
