use agenda_core::coalition::Coalition;
use agenda_core::feature_space::{build_space, Parameter, Scale, DEFAULT_PROFILE_CAP};
use agenda_core::lattice::{AgendaLattice, IssueSet, DEFAULT_GENERATOR_CAP};
use agenda_core::logic::correspondence::{all_pairs, FrameCaps};
use agenda_core::logic::frame::RelationalStructure;
use agenda_core::partition::Partition;
use agenda_core::scenario::{fixtures, Scenario};
use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> Partition {
    let raw: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n / 4 + 1)).collect();
    Partition::from_labels(&raw)
}

fn partitions(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [64, 1024] {
        let (a, b) = (random_partition(&mut rng, n), random_partition(&mut rng, n));
        c.bench_function(&format!("meet/{n}"), |bench| bench.iter(|| black_box(&a).meet(black_box(&b)).unwrap()));
        c.bench_function(&format!("join/{n}"), |bench| bench.iter(|| black_box(&a).join(black_box(&b)).unwrap()));
    }
}

fn lattices(c: &mut Criterion) {
    let names = ["a", "b", "c", "d"];
    let space = build_space(names.iter().map(|n| Parameter::new(*n, Scale::uniform_chain(3))).collect(), DEFAULT_PROFILE_CAP)
        .unwrap();
    c.bench_function("lattice/projections-4x3", |bench| {
        bench.iter(|| AgendaLattice::build(IssueSet::projections(&space).unwrap(), DEFAULT_GENERATOR_CAP))
    });
    let space = build_space(names.iter().map(|n| Parameter::new(*n, Scale::binary())).collect(), DEFAULT_PROFILE_CAP).unwrap();
    c.bench_function("lattice/thresholds-4", |bench| {
        bench.iter(|| AgendaLattice::build(IssueSet::all_thresholds(&space).unwrap(), DEFAULT_GENERATOR_CAP))
    });
    let car = Scenario::from_json(fixtures::CAR).unwrap();
    c.bench_function("scenario/car-analyze", |bench| bench.iter(|| car.analyze().unwrap()));
    let h = car.structure();
    c.bench_function("scenario/car-common-agenda", |bench| {
        bench.iter(|| h.common_agenda(black_box(Coalition::full(2))))
    });
}

fn correspondence(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let frames: Vec<_> = (0..20).map(|_| RelationalStructure::random(3, 3, &mut rng).unwrap()).collect();
    c.bench_function("correspondence/20-random-3x3", |bench| {
        bench.iter(|| frames.iter().map(|f| all_pairs(f, FrameCaps::default()).unwrap().len()).sum::<usize>())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = partitions, lattices, correspondence
}
criterion_main!(benches);
