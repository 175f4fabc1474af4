//! The six metrics on a few label-vector pairs.
use fmax::{LabelVector, MetricKind};

fn main() -> fmax::Result<()> {
    let pairs = [
        ("1100", "1010"),
        ("0000", "0000"),
        ("1111", "1000"),
        ("0110", "0000"),
    ];
    print!("{:<10}", "y / h");
    for metric in MetricKind::ALL {
        print!("{:>10}", metric.name());
    }
    println!();
    for (y, h) in pairs {
        let (y, h): (LabelVector, LabelVector) = (y.parse()?, h.parse()?);
        print!("{:<10}", format!("{y}/{h}"));
        for metric in MetricKind::ALL {
            print!("{:>10.4}", metric.evaluate(&y, &h)?);
        }
        println!();
    }
    Ok(())
}
