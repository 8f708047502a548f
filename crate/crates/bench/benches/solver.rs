use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use domgame_bench::{mixed_bipartite, path, star};
use domgame_core::engine::{Player, Position, Solver};
use domgame_core::{Color, Kernel};

fn kernel(c: &mut Criterion) {
    c.bench_function("kernel/add towers", |b| {
        b.iter(|| {
            let mut k = Kernel::new();
            let up = k.up_tower(6, true).unwrap();
            let down = k.down_tower(5, false).unwrap();
            black_box(k.add(up, down).unwrap())
        })
    });
    c.bench_function("kernel/leq up multiples", |b| {
        b.iter(|| {
            let mut k = Kernel::new();
            let x = k.up_multiple(8, true).unwrap();
            let y = k.up_tower(4, false).unwrap();
            black_box(k.leq(x, y))
        })
    });
}

fn game_value(c: &mut Criterion) {
    let mut group = c.benchmark_group("engine/game_value");
    for leaves in [6, 10, 14] {
        let g = star(Color::C, leaves / 3, leaves / 3, leaves - 2 * (leaves / 3));
        group.bench_with_input(BenchmarkId::new("star", leaves), &g, |b, g| {
            b.iter(|| {
                let mut k = Kernel::new();
                Solver::default().game_value(&mut k, &Position::new(g).unwrap()).unwrap()
            })
        });
    }
    for s in [3, 5, 7] {
        let g = mixed_bipartite(s, s);
        group.bench_with_input(BenchmarkId::new("bipartite", 2 * s), &g, |b, g| {
            b.iter(|| {
                let mut k = Kernel::new();
                Solver::default().game_value(&mut k, &Position::new(g).unwrap()).unwrap()
            })
        });
    }
    group.finish();
}

fn winner(c: &mut Criterion) {
    let mut group = c.benchmark_group("engine/winner");
    for n in [8, 14, 20] {
        let g = path(n);
        group.bench_with_input(BenchmarkId::new("path", n), &g, |b, g| {
            b.iter(|| Solver::default().winner(&Position::new(g).unwrap(), Player::Alice).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, kernel, game_value, winner);
criterion_main!(benches);
