"""SVG plots of scaling results, each written with the CSV series it draws."""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from pathlib import Path
from typing import Dict, List, Union

# third-party imports
import matplotlib as mpl
mpl.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

# symscale
from symscale.scaling.analysis import ScalingReport  # noqa: E402
from symscale.scaling.hparams import HparamReport, SweepGrid  # noqa: E402


PLOT_STYLE = {
    'font.family': 'sans-serif',
    'font.size': 9,
    'axes.labelsize': 9,
    'legend.fontsize': 7,
    'xtick.labelsize': 8,
    'ytick.labelsize': 8,
    'figure.figsize': (5.0, 3.4),
    # fixed ids keep repeated renders byte-identical
    'svg.hashsalt': 'symscale',
}
mpl.rcParams.update(PLOT_STYLE)


def new(nrows: int = 1, ncols: int = 1):
    return plt.subplots(nrows=nrows, ncols=ncols)


def save(figure, path: Union[Path, str], series: pd.DataFrame) -> List[Path]:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    svg_path, csv_path = path.with_suffix('.svg'), path.with_suffix('.csv')
    figure.tight_layout()
    figure.savefig(svg_path, format='svg', metadata={'Date': None})
    plt.close(figure)
    series.to_csv(csv_path, index=False, lineterminator='\n')
    return [svg_path, csv_path]


def _law_curve(report: ScalingReport, n: int = 100) -> np.ndarray:
    high = max(report.front['flops'].max(), report.target_compute)
    return np.geomspace(report.front['flops'].min(), high, n)


def _runs_by_size(ax, table: pd.DataFrame, column: str) -> None:
    for label, group in table.dropna(subset=[column]).groupby('size', sort=False):
        ax.scatter(group['flops'], group[column], s=10, alpha=0.6, label=str(label))


def plot_loss(report: ScalingReport, table: pd.DataFrame, path: Union[Path, str]) -> List[Path]:
    figure, ax = new()
    _runs_by_size(ax, table, 'validation_loss')
    compute = _law_curve(report)
    law = report.loss_law
    ax.plot(compute, law.predict(compute), 'k--', linewidth=1,
            label=f'{law.a:.3g} C^{law.b:.3f}')
    ax.scatter(report.front['flops'], report.front['validation_loss'], marker='x', color='black',
               s=18, label='Pareto front')
    ax.set_xscale('log')
    ax.set_yscale('log')
    ax.set_xlabel('training FLOPs')
    ax.set_ylabel('validation loss')
    ax.legend()
    series = pd.DataFrame({'flops': compute, 'validation_loss': law.predict(compute)})
    return save(figure, path, series)


def plot_accuracy(report: ScalingReport, table: pd.DataFrame, path: Union[Path, str]) -> List[Path]:
    figure, ax = new()
    compute = _law_curve(report)
    series: Dict[str, np.ndarray] = {'flops': compute}
    for metric, law in report.accuracy_laws.items():
        points = table.dropna(subset=[metric])
        ax.scatter(points['flops'], points[metric], s=10, alpha=0.6, label=metric)
        raw = 1.0 - np.asarray(law.error_law.predict(compute))
        series[metric] = np.clip(raw, 0.0, 1.0)
        ax.plot(compute, series[metric], '--', linewidth=1,
                label=f'1 - {law.error_law.a:.3g} C^{law.error_law.b:.3f}')
    ax.set_xscale('log')
    ax.set_xlabel('training FLOPs')
    ax.set_ylabel('accuracy')
    ax.set_ylim(0.0, 1.0)
    ax.legend()
    return save(figure, path, pd.DataFrame(series))


def plot_hparam_trends(report: HparamReport, path: Union[Path, str]) -> List[Path]:
    figure, (batch_ax, lr_ax) = new(ncols=2)
    frame = report.to_frame()
    for ax, column, law in ((batch_ax, 'batch_size', report.batch_law),
                            (lr_ax, 'learning_rate', report.learning_rate_law)):
        ax.scatter(frame['n_params'], frame[column], s=14)
        if law is not None:
            sizes = np.geomspace(frame['n_params'].min(), frame['n_params'].max(), 50)
            ax.plot(sizes, law.predict(sizes), 'k--', linewidth=1, label=f'N^{law.b:.3f}')
            ax.legend()
        ax.set_xscale('log')
        ax.set_yscale('log')
        ax.set_xlabel('parameters N')
        ax.set_ylabel(f'optimal {column.replace("_", " ")}')
    return save(figure, path, frame)


def plot_sweep_heatmap(grid: SweepGrid, n_params: float, path: Union[Path, str]) -> List[Path]:
    frame = grid.to_frame()
    frame = frame[frame['n_params'] == n_params]
    table = frame.pivot_table(index='batch_size', columns='learning_rate', values='validation_loss', aggfunc='min')
    figure, ax = new()
    image = ax.imshow(table.to_numpy(), aspect='auto', origin='lower', cmap='viridis')
    ax.set_xticks(range(table.shape[1]), [f'{rate:.2g}' for rate in table.columns], rotation=45)
    ax.set_yticks(range(table.shape[0]), [str(batch) for batch in table.index])
    ax.set_xlabel('learning rate')
    ax.set_ylabel('batch size')
    ax.set_title(f'final validation loss, N={n_params:.3g}')
    figure.colorbar(image, ax=ax)
    return save(figure, path, table.reset_index())


def plot_scaling_report(report: ScalingReport, table: pd.DataFrame, out_dir: Union[Path, str]) -> List[Path]:
    out_dir = Path(out_dir)
    written = plot_loss(report, table, out_dir / 'loss_vs_flops')
    if report.accuracy_laws:
        written += plot_accuracy(report, table, out_dir / 'accuracy_vs_flops')
    return written
