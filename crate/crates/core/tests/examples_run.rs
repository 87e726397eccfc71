//! Every example must run to completion.

#[path = "../examples/emit_models.rs"]
mod emit_models;
#[path = "../examples/exact_dp.rs"]
mod exact_dp;
#[path = "../examples/fptas.rs"]
mod fptas;
#[path = "../examples/kdim_and_thickness.rs"]
mod kdim_and_thickness;
#[path = "../examples/layout_transforms.rs"]
mod layout_transforms;
#[path = "../examples/partition_reduction.rs"]
mod partition_reduction;
#[path = "../examples/render_svg.rs"]
mod render_svg;
#[path = "../examples/uniform_suite.rs"]
mod uniform_suite;

macro_rules! example_tests {
    ($($name:ident),*) => {$(
        #[test]
        fn $name() {
            $name::run().unwrap();
        }
    )*};
}

example_tests!(
    emit_models,
    exact_dp,
    fptas,
    kdim_and_thickness,
    layout_transforms,
    partition_reduction,
    render_svg,
    uniform_suite
);
