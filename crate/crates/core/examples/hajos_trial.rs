//! Random Hajós sequences from K_5, with and without identification.
use immlab::hajos::{random_trial, RandomTrialConfig};
use immlab::immersion::SearchOptions;

fn main() -> immlab::Result<()> {
    let opts = SearchOptions::default();
    for allow_beta in [false, true] {
        let cfg = RandomTrialConfig {
            steps: 12,
            allow_beta,
            max_order: 20,
            ..RandomTrialConfig::default()
        };
        let mut flips = 0;
        for seed in 0..20 {
            let r = random_trial(seed, &cfg, &opts)?;
            assert!(!r.non_beta_flip);
            if let Some(i) = r.flip_index {
                flips += 1;
                println!("seed {seed}: K_5 lost at step {i} ({})", r.steps[i].op.kind());
            }
        }
        println!("allow_beta={allow_beta}: {flips}/20 trials lost K_5");
    }
    Ok(())
}
