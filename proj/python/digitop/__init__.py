"""Digital homotopy on finite subsets of the integer lattice."""

from ._digitop import (
    DigitopError,
    Image,
    Map,
    circle8,
    compose,
    constant_map,
    count_maps,
    cover_point,
    dcat,
    diamond,
    fixture,
    homotopic,
    identity,
    interval,
    is_contractible,
    is_subdivision_categorical,
    is_subdivision_contractible,
    lift_path,
    maps_adjacent,
    product,
    retraction,
    run_suite,
    set_max_threads,
    single_point,
    sphere,
    subdivide_image,
    subdivision_projection,
    winding_index,
    winding_number,
)

__all__ = [name for name in dir() if not name.startswith("_")]
