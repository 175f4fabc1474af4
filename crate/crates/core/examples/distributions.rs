//! Joint representations, sampling, and the text file formats.
use fmax::distributions::io::{parse_distribution, write_distribution, write_marginals};
use fmax::simulate::make_chain_model;
use fmax::{Enumerable, ProductBernoulli, Sampler};

fn main() -> fmax::Result<()> {
    let table = parse_distribution("m 3\n110 0.5\n011 0.3\n000 0.2\n")?;
    println!(
        "table marginals: {}",
        write_marginals(&table.marginals()).trim()
    );
    println!(
        "joint mode {}, marginal modes {}",
        table.joint_mode(),
        table.marginal_modes()
    );

    let product = ProductBernoulli::new(vec![0.9, 0.5, 0.1])?;
    println!("product as a table:\n{}", write_distribution(&product));

    let sample = table.sample(1000, 42)?;
    println!(
        "1000 draws from the table: {} distinct, empirical marginals {}",
        sample.distinct(),
        write_marginals(&sample.marginals()).trim()
    );

    let chain = make_chain_model(6, 7)?;
    let draws = chain.sample(5000, 1)?;
    println!(
        "chain model, 5000 draws, most frequent vector {}",
        draws.joint_mode()
    );
    Ok(())
}
