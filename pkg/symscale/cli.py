"""Command-line pipeline: generate -> sample -> train -> evaluate -> analyze.

Every subcommand reads the pipeline config (a packaged name such as ``toy`` or
a JSON path), applies SYMSCALE_SEED and then the command-line overrides.
Library errors are turned into exit codes: 1 for usage or config problems, 2
for data problems, 3 for numerical failures.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import argparse
import itertools
import json
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence

# third-party imports
from joblib import Parallel, delayed

# symscale
from symscale.config.pipeline import (
    PipelineConfig, apply_environment, get_config_path, load_config, stage_digest, with_overrides,
)
from symscale.data.corpus import build_corpus, open_corpus
from symscale.exceptions import ArtifactHashError, ConfigError, InsufficientGridError, SymscaleError
from symscale.expressions.generator import ExpressionSet, build_expression_set, read_config_digest
from symscale.ml.checkpoint import load_checkpoint
from symscale.ml.evaluator import attach_to_run_record, evaluate_model, require_split
from symscale.ml.trainer import CHECKPOINT_FILE, CONFIG_FILE, RUN_RECORD_FILE, RunRecord, Trainer
from symscale.scaling.analysis import fit_scaling_table
from symscale.scaling.hparams import optimal_hparams
from symscale.scaling.paper import load_results_table, reproduce_paper_fits
from symscale.scaling.plotting import plot_hparam_trends, plot_scaling_report, plot_sweep_heatmap
from symscale.scaling.runs import load_run_table, sweep_grid_from_table


logging.basicConfig(
    format='[symscale][%(asctime)s][%(levelname)s]: %(message)s',
    level=logging.INFO
)
LOGGER: logging.Logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """
    Reports usage errors as ConfigError instead of exiting.
    """

    def error(self, message):
        raise ConfigError(f'{self.prog}: {message}')


def number_list(cast: Callable) -> Callable[[str], List]:
    def parse(text: str) -> List:
        try:
            return [cast(item) for item in text.split(',') if item.strip()]
        except ValueError as value_error:
            raise argparse.ArgumentTypeError(f'not a comma-separated list: {text!r}') from value_error
    return parse


def resolve_config(value: Optional[str]) -> PipelineConfig:
    """
    A config file path or the name of a packaged config.
    """
    if value is None:
        value = 'default'
    path = Path(value)
    if not path.is_file():
        packaged = get_config_path(value)
        if not packaged.is_file():
            raise ConfigError(f'no config file or packaged config named {value!r}')
        path = packaged
    return load_config(path)


def prepare_config(args: argparse.Namespace, default: Optional[str] = None) -> PipelineConfig:
    config = apply_environment(resolve_config(args.config or default))
    return with_overrides(config, seed=args.seed)


def output_root(config: PipelineConfig) -> Path:
    return Path(config.output_dir)


def run_name(config: PipelineConfig) -> str:
    train = config.train
    return f'{config.model.size}-b{train.batch_size}-lr{train.learning_rate:g}-r{train.token_ratio:g}'


def check_digest(found: str, expected: str, what: str, force: bool) -> None:
    if found == expected:
        return
    message = f'{what} was produced by config {found[:12]}, expected {expected[:12]}'
    if not force:
        raise ArtifactHashError(message)
    LOGGER.warning(message + ' (continuing because of --force)')


# -----------------------------------------------------------------------------
# Subcommands
# -----------------------------------------------------------------------------


def generate_expressions(args: argparse.Namespace) -> int:
    config = prepare_config(args)
    data = config.data
    out_dir = Path(args.out_dir) if args.out_dir else output_root(config) / 'expressions'
    expression_set = build_expression_set(data.n_vars, data.max_depth, data.expression_count, config.seed,
                                          n_jobs=args.jobs, node_cap=data.node_cap, progress=args.progress)
    expression_set.save(out_dir, stage_digest(config, 'expressions'))
    print(f'{len(expression_set)} expressions written to {out_dir}')
    return 0


def sample_data(args: argparse.Namespace) -> int:
    config = prepare_config(args)
    root = output_root(config)
    expressions_dir = Path(args.expressions_dir) if args.expressions_dir else root / 'expressions'
    out_dir = Path(args.out_dir) if args.out_dir else root / 'corpus'
    check_digest(read_config_digest(expressions_dir), stage_digest(config, 'expressions'),
                 f'expression set {expressions_dir}', args.force)
    manifest = build_corpus(ExpressionSet.load(expressions_dir), config, out_dir, n_jobs=args.jobs,
                            fmt=args.format, progress=args.progress)
    for split, summary in manifest['splits'].items():
        print(f'{split}: {summary["n_pairs"]} pairs')
    return 0


def train_config(args: argparse.Namespace) -> PipelineConfig:
    config = prepare_config(args)
    config = with_overrides(config, 'model', size=args.model_size)
    return with_overrides(config, 'train', batch_size=args.batch_size, learning_rate=args.lr,
                          token_ratio=args.ratio, max_steps=args.max_steps)


def train(args: argparse.Namespace) -> int:
    config = train_config(args)
    root = output_root(config)
    corpus = open_corpus(Path(args.corpus_dir) if args.corpus_dir else root / 'corpus', config, args.force)
    out_dir = Path(args.out_dir) if args.out_dir else root / 'train' / run_name(config)
    trainer = Trainer(config, corpus, out_dir, force=args.force, progress=args.progress)
    plan = trainer.plan()
    if args.dry_run:
        print(f'parameters: {plan.n_total} total, N_enc={plan.n_enc}, N_dec={plan.n_dec}')
        print(f'output-token budget: {plan.token_budget:.6g} ({config.train.token_ratio:g} x N)')
        print(f'steps: {plan.total_steps} ({plan.epochs:.2f} epochs), eval at {len(plan.eval_steps)} points')
        print(f'D_in={plan.tokens_in} D_out={plan.tokens_out} FLOPs={plan.flops:.6g}')
        return 0
    record = trainer.train(resume=args.resume)
    print(f'run written to {out_dir}: final validation loss {record.final_metrics.get("validation_loss", "n/a")}')
    return 0


def evaluate_run(config: PipelineConfig, run_dir: Path, corpus_dir: Path, out_dir: Path,
                 force: bool = False, n_jobs: int = 1, progress: bool = False) -> None:
    record_path = run_dir / RUN_RECORD_FILE
    if record_path.is_file():
        check_digest(RunRecord.load(record_path).config_digest, stage_digest(config, 'train'),
                     f'run {run_dir}', force)
    checkpoint = load_checkpoint(run_dir / CHECKPOINT_FILE)
    model = checkpoint.build_model()
    corpus = open_corpus(corpus_dir, config, force)
    evaluation = config.eval
    pairs = require_split(corpus.pairs(evaluation.split), evaluation.split)
    if evaluation.limit is not None:
        pairs = pairs[:evaluation.limit]
    report = evaluate_model(model, pairs, checkpoint.vocabulary, seeds=evaluation.seeds,
                            n_candidates=evaluation.n_candidates, temperature=evaluation.temperature,
                            batch_size=config.train.eval_batch_size, n_jobs=n_jobs, progress=progress,
                            config_digest=stage_digest(config, 'evaluate'))
    report.save(out_dir)
    attach_to_run_record(run_dir, report)
    print(f'{run_dir}: Acc_solved {report.acc_solved:.4f}, Acc_R2 {report.acc_r2:.4f}, '
          f'test loss {report.test_loss:.4f}')


def evaluate(args: argparse.Namespace) -> int:
    run_dir = Path(args.run_dir)
    stored = run_dir / CONFIG_FILE
    config = prepare_config(args, default=str(stored) if stored.is_file() else None)
    config = with_overrides(config, 'eval', n_candidates=args.candidates, seeds=args.seeds, split=args.split,
                            limit=args.limit)
    root = output_root(config)
    evaluate_run(config, run_dir, Path(args.corpus_dir) if args.corpus_dir else root / 'corpus',
                 Path(args.out_dir) if args.out_dir else run_dir, args.force, args.jobs, args.progress)
    return 0


def fit_scaling(args: argparse.Namespace) -> int:
    config = prepare_config(args)
    if args.table:
        table = load_results_table(args.table, verify=False)
    elif args.runs:
        table = load_run_table(args.runs)
    else:
        raise ConfigError('fit-scaling needs run directories or --table')
    analysis = config.analysis
    report = fit_scaling_table(table, n_bins=args.bins or analysis.n_bins,
                               target_compute=args.target_compute or analysis.target_compute,
                               offset=args.offset or analysis.offset, budgets=args.budgets or ())
    out_dir = Path(args.out_dir) if args.out_dir else output_root(config) / 'scaling'
    report.save(out_dir)
    plot_scaling_report(report, table, out_dir)
    print(report.describe())
    return 0


def _sweep_run(config: PipelineConfig, corpus_dir: Path, run_dir: Path, force: bool, evaluate_after: bool) -> str:
    corpus = open_corpus(corpus_dir, config, force)
    Trainer(config, corpus, run_dir, force=force).train(resume=True)
    if evaluate_after:
        evaluate_run(config, run_dir, corpus_dir, run_dir, force)
    return str(run_dir)


def sweep(args: argparse.Namespace) -> int:
    base = prepare_config(args)
    root = output_root(base)
    corpus_dir = Path(args.corpus_dir) if args.corpus_dir else root / 'corpus'
    out_dir = Path(args.out_dir) if args.out_dir else root / 'sweep'
    sizes = args.model_sizes or [base.model.size]
    batches = args.batch_sizes or [base.train.batch_size]
    rates = args.lrs or [base.train.learning_rate]
    ratios = args.ratios or [base.train.token_ratio]
    jobs = []
    for size, batch_size, rate, ratio in itertools.product(sizes, batches, rates, ratios):
        config = with_overrides(base, 'model', size=size)
        config = with_overrides(config, 'train', batch_size=batch_size, learning_rate=rate, token_ratio=ratio)
        jobs.append((config, out_dir / run_name(config)))
    LOGGER.info(f'sweep of {len(jobs)} runs into {out_dir}')
    run_dirs = Parallel(n_jobs=args.parallel)(
        delayed(_sweep_run)(config, corpus_dir, run_dir, args.force, args.evaluate) for config, run_dir in jobs)

    table = load_run_table(run_dirs)
    grid = sweep_grid_from_table(table)
    grid.to_frame().to_csv(out_dir / 'sweep_grid.csv', index=False, lineterminator='\n')
    for n_params in grid.sizes():
        plot_sweep_heatmap(grid, n_params, out_dir / f'sweep_heatmap_{n_params:.0f}')
    try:
        hparams = optimal_hparams(grid)
    except InsufficientGridError as grid_error:
        LOGGER.warning(f'no hyperparameter interpolation: {grid_error}')
    else:
        with open(out_dir / 'hparams.json', 'w', encoding='utf-8', newline='\n') as f:
            f.write(json.dumps(hparams.to_dict(), indent=2, sort_keys=True) + '\n')
        plot_hparam_trends(hparams, out_dir / 'hparam_trends')
        for optimum in hparams.optima:
            print(f'N={optimum.n_params:.4g}: batch* {optimum.batch_size:.4g}, lr* {optimum.learning_rate:.4g}, '
                  f'loss {optimum.loss:.4f}')
    if len(ratios) > 1 or len(sizes) > 1:
        report = fit_scaling_table(table, n_bins=base.analysis.n_bins, target_compute=base.analysis.target_compute)
        report.save(out_dir)
        print(report.describe())
    return 0


def reproduce_fits(args: argparse.Namespace) -> int:
    report = reproduce_paper_fits(n_bins=args.bins, target_compute=args.target_compute)
    if args.out_dir:
        report.save(args.out_dir)
        plot_scaling_report(report, load_results_table(), args.out_dir)
    print(report.describe())
    return 0


# -----------------------------------------------------------------------------
# Parser
# -----------------------------------------------------------------------------


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='symscale', description='Symbolic-regression transformer scaling lab')
    commands = parser.add_subparsers(dest='command', parser_class=ArgumentParser, required=True)

    def command(name: str, func: Callable, help_text: str) -> ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.set_defaults(func=func)
        sub.add_argument('--config', dest='config', type=str, default=None,
                         help='Config JSON path or packaged config name (default, toy)')
        sub.add_argument('--seed', dest='seed', type=int, default=None, help='Global seed override')
        sub.add_argument('--out-dir', dest='out_dir', type=str, default=None, help='Output directory')
        sub.add_argument('--force', dest='force', action='store_true',
                         help='Accept inputs produced by another config')
        sub.add_argument('--jobs', dest='jobs', type=int, default=1, help='Parallel workers')
        sub.add_argument('--progress', dest='progress', action='store_true', help='Show progress bars')
        return sub

    command('generate-expressions', generate_expressions, 'Build the base expression set')

    sub = command('sample-data', sample_data, 'Sample the training, validation and test corpus')
    sub.add_argument('--expressions-dir', dest='expressions_dir', type=str, default=None)
    sub.add_argument('--format', dest='format', choices=['binary', 'jsonl', 'both'], default='binary',
                     help='Shard format')

    sub = command('train', train, 'Train one model to its token budget')
    sub.add_argument('--corpus-dir', dest='corpus_dir', type=str, default=None)
    sub.add_argument('--model-size', dest='model_size', type=str, default=None,
                     choices=['6.5M', '13.5M', '24M', '45.5M', '93M', 'custom'])
    sub.add_argument('--batch-size', dest='batch_size', type=int, default=None)
    sub.add_argument('--lr', dest='lr', type=float, default=None, help='Peak learning rate')
    sub.add_argument('--ratio', dest='ratio', type=float, default=None, help='Token-to-parameter ratio')
    sub.add_argument('--max-steps', dest='max_steps', type=int, default=None)
    sub.add_argument('--dry-run', dest='dry_run', action='store_true', help='Print the budget and exit')
    sub.add_argument('--resume', dest='resume', action='store_true', help='Continue from the last checkpoint')

    sub = command('evaluate', evaluate, 'Best-of-n evaluation of a trained run')
    sub.add_argument('--run-dir', dest='run_dir', type=str, required=True)
    sub.add_argument('--corpus-dir', dest='corpus_dir', type=str, default=None)
    sub.add_argument('--candidates', dest='candidates', type=int, default=None)
    sub.add_argument('--seeds', dest='seeds', type=number_list(int), default=None, help='e.g. 0,1,2')
    sub.add_argument('--split', dest='split', choices=['validation', 'test'], default=None)
    sub.add_argument('--limit', dest='limit', type=int, default=None, help='Evaluate the first N pairs only')

    sub = command('fit-scaling', fit_scaling, 'Fit scaling laws to training runs or a results table')
    sub.add_argument('runs', nargs='*', help='Run directories (searched for run_record.json)')
    sub.add_argument('--table', dest='table', type=str, default=None, help='CSV in the results-table layout')
    sub.add_argument('--bins', dest='bins', type=int, default=None)
    sub.add_argument('--offset', dest='offset', action='store_true', help='Fit an irreducible-loss term')
    sub.add_argument('--target-compute', dest='target_compute', type=float, default=None)
    sub.add_argument('--budgets', dest='budgets', type=number_list(float), default=None,
                     help='Compute budgets for the N/D trade-off report')

    sub = command('sweep', sweep, 'Train a grid of configs and interpolate the optimal hyperparameters')
    sub.add_argument('--corpus-dir', dest='corpus_dir', type=str, default=None)
    sub.add_argument('--model-sizes', dest='model_sizes', type=number_list(str), default=None)
    sub.add_argument('--batch-sizes', dest='batch_sizes', type=number_list(int), default=None)
    sub.add_argument('--lrs', dest='lrs', type=number_list(float), default=None)
    sub.add_argument('--ratios', dest='ratios', type=number_list(float), default=None)
    sub.add_argument('--parallel', dest='parallel', type=int, default=1, help='Concurrent training runs')
    sub.add_argument('--evaluate', dest='evaluate', action='store_true', help='Evaluate each run after training')

    sub = commands.add_parser('reproduce-paper-fits', help='Fit the published results table')
    sub.set_defaults(func=reproduce_fits)
    sub.add_argument('--bins', dest='bins', type=int, default=1500)
    sub.add_argument('--target-compute', dest='target_compute', type=float, default=3.8e21)
    sub.add_argument('--out-dir', dest='out_dir', type=str, default=None)
    return parser


def run_subcommand(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(list(sys.argv[1:] if argv is None else argv))
        return args.func(args)
    except SymscaleError as error:
        LOGGER.error(str(error))
        return error.exit_code


def main() -> None:
    sys.exit(run_subcommand())
