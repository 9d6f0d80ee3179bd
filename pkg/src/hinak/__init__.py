"""Higher Nakayama algebras: presentations, cluster-tilting modules, exact verification."""

from .algebras import (
    AlgebraSpec,
    BasisElt,
    PresentedAlgebra,
    build,
    export_dot,
    export_json,
    export_qpa,
    import_json,
    mesh_presentation,
)
from .combinat import (
    KupischSeries,
    canonical_orbit_rep,
    enumerate_os,
    interlaces,
    kupisch_hasse_path,
    loewy_len,
    mesh_coordinates,
    nakayama_permutation,
    restrict_os,
    translate_tuple,
    validate_kupisch,
)
from .checks import (
    CheckReport,
    check_cluster_tilting,
    check_endo_tower,
    check_gldim,
    check_hom_ext_formulas,
    check_homological_embedding,
    check_kupisch_lengths,
    check_mesh_iso,
    check_orbit_periodicity,
    check_proj_inj,
    check_resolutions,
    check_selfinjective,
    check_tau_translate,
    run_all,
    run_suite,
)
from .linalg import Mat
from .reps import (
    MatrixModule,
    d_almost_split_summands,
    domdim,
    dualize,
    endo_algebra,
    ext_dim,
    gldim,
    hom_space,
    image_interval,
    injective_envelope,
    injective_module,
    interval_module,
    loewy_length_module,
    min_inj_coresolution,
    min_proj_resolution,
    modules_isomorphic,
    nakayama_functor,
    orbit_ext_dim,
    orbit_hom_dim,
    projective_cover,
    projective_module,
    simple_module,
    socle_module,
    stable_hom_dim,
    syzygy_module,
    tau_d,
    tau_d_inverse,
    top_module,
    zero_module,
)

__version__ = "0.1.0"
