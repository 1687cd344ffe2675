"""
Main application entry point.

Subcommands
===========

  limits     per-state limit times and angles (``--scales`` adds the
             exponential table at every admissible drawing scale)
  chart      classify observations and write the SVG chart plus a JSON report
  classify   classify observations, print a table or JSON
  simulate   generate observations from the configured scenario
  aggregate  sum every r TTFs of the same state
  verify     oracle sweep of quantiles and angles
  sweep      angular limits as a function of the shape parameter

Exit codes: 0 success / all points in control, 2 at least one point out of
control (chart, classify), 1 usage, parse or validation error.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.charts import (
    ADMISSIBLE_SCALES,
    Chart,
    DrawingScale,
    SystemModel,
    build_chart,
    limit_angles,
    limit_times,
    median_split,
    scale_table,
    shape_sweep,
    state_summary,
)
from src.config import SystemConfig, get_config, get_settings
from src.distributions import DistributionFamily
from src.errors import ACCError
from src.processing import format_observations, read_observations, write_observations
from src.rendering import render_svg
from src.simulation import aggregate_r, erlang_lift, example_scenarios, run_scenario
from src.utils.logger import setup_logger
from src.verification import GRID_SHAPES, verify_grid

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_OUT_OF_CONTROL = 2


def parse_shapes(text: str) -> List[float]:
    """``start:stop:step`` (inclusive) or a comma list."""
    if ':' in text:
        parts = text.split(':')
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"expected start:stop:step, got '{text}'")
        start, stop, step = (float(p) for p in parts)
        if step <= 0 or stop < start:
            raise argparse.ArgumentTypeError(f"empty shape range '{text}'")
        count = int(round((stop - start) / step))
        return [round(start + i * step, 10) for i in range(count + 1)]
    return [float(p) for p in text.split(',') if p.strip()]


class ACCApplication:
    """Angular control chart command-line application."""

    def __init__(self, args: argparse.Namespace):
        """
        Initialize application.

        Args:
            args: Parsed command-line arguments
        """
        self.args = args
        self.settings = None
        self.logger = None
        self.config: Optional[SystemConfig] = None

    def setup(self) -> None:
        """Configure logging and load the system configuration when the command needs it."""
        self.settings = get_settings()
        level = 'DEBUG' if self.args.verbose else (self.args.log_level or self.settings.log_level)
        self.logger = setup_logger(
            name="acc",
            level=level,
            log_file=self.settings.log_file,
            use_colors=True
        )
        if self.args.command in ('verify', 'sweep'):
            return
        if self.args.command == 'simulate' and self.args.example:
            return
        path = self.args.config or self.settings.config_path
        self.config = get_config(path).system_config()
        self.logger.debug(f"Loaded configuration from {path}")

    # -- helpers ---------------------------------------------------------

    def _system(self) -> SystemModel:
        system = self.config.to_system()
        scale = getattr(self.args, 'scale', None)
        if scale:
            system = system.replace(scale=DrawingScale.from_name(scale))
        return system

    def _chart(self) -> Chart:
        system = self._system()
        observations = read_observations(self.args.observations, system)
        design = getattr(self.args, 'design', None) or self.config.chart.design
        r = getattr(self.args, 'aggregate', None)
        if r:
            observations = aggregate_r(observations, r)
            system = erlang_lift(system, r)
            self.logger.info(f"Aggregated every {r} TTFs: {len(observations)} point(s)")
        return build_chart(system, design, observations)

    @staticmethod
    def _report(chart: Chart) -> Dict[str, Any]:
        """Machine-readable classification (angles unrounded)."""
        labels = chart.system.labels
        return {
            'design': chart.design.value,
            'scale': chart.system.scale.name,
            'c': chart.system.c,
            'states': [s.model_dump(mode='json') for s in state_summary(chart)],
            'points': [
                {
                    'seq': p.observation.seq,
                    'state': labels[p.observation.state_index - 1],
                    'ttf': p.observation.ttf,
                    'theta': p.theta,
                    'status': p.status.value,
                    'side': p.above_center.value,
                }
                for p in chart.points
            ],
            'median_split': {k: v.model_dump() for k, v in median_split(chart).items()},
            'out_of_control': [p.observation.seq for p in chart.out_of_control],
        }

    @staticmethod
    def _exit_for(chart: Chart) -> int:
        return EXIT_OUT_OF_CONTROL if chart.out_of_control else EXIT_OK

    def _write(self, path: Path, text: str) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8', newline='')
        self.logger.info(f"Wrote {path}")
        return path

    # -- commands --------------------------------------------------------

    def cmd_limits(self) -> int:
        system = self._system()
        rows = []
        for state in system.states:
            times = limit_times(state.spec, system.c)
            limits = limit_angles(state.spec, system.c, system.scale)
            rows.append({
                'state': state.label,
                'distribution': state.spec.label,
                'T_L': times.lower, 'T_C': times.center, 'T_U': times.upper,
                'theta_U': limits.theta_U, 'theta_C': limits.theta_C, 'theta_L': limits.theta_L,
            })
        table = [(name, lim) for name, lim in scale_table(system.c)] if self.args.scales else []

        if self.args.json:
            payload: Dict[str, Any] = {'scale': system.scale.name, 'c': system.c, 'states': rows}
            if table:
                payload['exponential_by_scale'] = [
                    {'scale': name, 'theta_L': lim.theta_L, 'theta_U': lim.theta_U} for name, lim in table
                ]
            print(json.dumps(payload, indent=2))
            return EXIT_OK

        print(f"Angular control limits (c={system.c:g}, {system.scale.name} scale)")
        print(f"{'state':<8}{'distribution':<36}{'T_L':>12}{'T_C':>12}{'T_U':>12}"
              f"{'theta_U':>9}{'theta_C':>9}{'theta_L':>9}")
        for row in rows:
            print(f"{row['state']:<8}{row['distribution']:<36}{row['T_L']:>12.4f}{row['T_C']:>12.4f}"
                  f"{row['T_U']:>12.4f}{row['theta_U']:>9.2f}{row['theta_C']:>9.2f}{row['theta_L']:>9.2f}")
        if table:
            print()
            print("Exponential ACLs by drawing scale")
            print(f"{'scale':<8}{'theta_L':>9}{'theta_U':>9}")
            for name, lim in table:
                print(f"{name:<8}{lim.theta_L:>9.2f}{lim.theta_U:>9.2f}")
        return EXIT_OK

    def cmd_classify(self) -> int:
        chart = self._chart()
        if self.args.format == 'json':
            print(json.dumps(self._report(chart), indent=2))
            return self._exit_for(chart)

        print(f"{'seq':>5}  {'state':<8}{'ttf':>12}{'theta':>9}  status")
        for p in chart.points:
            print(f"{p.observation.seq:>5}  {p.state_label:<8}{p.observation.ttf:>12.2f}"
                  f"{p.theta:>9.2f}  {p.status.value}")
        print()
        print(f"{'state':<10}{'above':>7}{'below':>7}{'on':>5}")
        for label, split in median_split(chart).items():
            print(f"{label:<10}{split.above:>7}{split.below:>7}{split.on:>5}")
        print(f"\n{len(chart.out_of_control)} out-of-control point(s)")
        return self._exit_for(chart)

    def cmd_chart(self) -> int:
        chart = self._chart()
        options = self.config.render_options()
        if self.args.width:
            options = options.model_copy(update={'width': self.args.width})
        if self.args.height:
            options = options.model_copy(update={'height': self.args.height})

        out = Path(self.args.out) if self.args.out else Path(self.settings.output_dir) / 'chart.svg'
        report = Path(self.args.json) if self.args.json else out.with_suffix('.json')
        self._write(out, render_svg(chart, options))
        self._write(report, json.dumps(self._report(chart), indent=2) + "\n")

        self.logger.info(
            f"{len(chart.points)} point(s), {len(chart.out_of_control)} out of control "
            f"({chart.design.value} design)"
        )
        return self._exit_for(chart)

    def cmd_simulate(self) -> int:
        if self.args.example:
            scenario = example_scenarios()[self.args.example]
            if self.args.seed is not None:
                scenario = scenario.model_copy(update={'seed': self.args.seed})
        else:
            scenario = self.config.scenario(self.args.seed)
        observations = run_scenario(scenario)
        labels = scenario.system.labels
        if self.args.out:
            write_observations(self.args.out, observations, labels)
        else:
            sys.stdout.write(format_observations(observations, labels))
        return EXIT_OK

    def cmd_aggregate(self) -> int:
        system = self._system()
        observations = aggregate_r(read_observations(self.args.observations, system), self.args.r)
        if self.args.out:
            write_observations(self.args.out, observations, system.labels)
        else:
            sys.stdout.write(format_observations(observations, system.labels))
        return EXIT_OK

    def cmd_verify(self) -> int:
        workers = self.args.workers or self.settings.workers
        report = verify_grid(self.args.c, self.args.shapes, ADMISSIBLE_SCALES, workers)
        worst = max((row.deviation for row in report.rows), default=0.0)
        print(f"{len(report.rows)} check(s), {len(report.failures)} failure(s), worst deviation {worst:.3e}")
        for row in report.failures:
            print(f"FAIL {row.subject} {row.check}: expected {row.expected!r} observed {row.observed!r} "
                  f"(deviation {row.deviation:.3e} > {row.tolerance:.1e})")
        return EXIT_OK if report.passed else EXIT_ERROR

    def cmd_sweep(self) -> int:
        family = DistributionFamily(self.args.family)
        rows = shape_sweep(family, self.args.shapes, self.args.c)
        if self.args.format == 'csv':
            print("shape,scale,theta_U,theta_L")
            for row in rows:
                print(f"{row.shape:g},{row.scale},{row.theta_U:.6f},{row.theta_L:.6f}")
            return EXIT_OK
        print(f"{family.value} ACLs by shape (c={self.args.c:g})")
        print(f"{'shape':>7}  {'scale':<7}{'theta_U':>9}{'theta_L':>9}")
        for row in rows:
            print(f"{row.shape:>7g}  {row.scale:<7}{row.theta_U:>9.2f}{row.theta_L:>9.2f}")
        return EXIT_OK

    def run(self) -> int:
        """Dispatch the selected subcommand and return its exit code."""
        handler = getattr(self, f"cmd_{self.args.command}")
        return handler()


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser."""
    parser = argparse.ArgumentParser(
        description='Angular control charts for multi-state system reliability'
    )
    parser.add_argument('--config', help='System configuration YAML (default: ACC_CONFIG_PATH or config.yaml)')
    parser.add_argument('--log-level', help='Override ACC_LOG_LEVEL')
    parser.add_argument('--verbose', action='store_true', help='Debug logging and tracebacks on error')

    sub = parser.add_subparsers(dest='command', required=True)

    limits = sub.add_parser('limits', help='Limit times and angles per state')
    limits.add_argument('--scales', action='store_true', help='Add exponential angles at every drawing scale')
    limits.add_argument('--scale', help='Drawing scale override (linear, sqrt, cbrt, qrt)')
    limits.add_argument('--json', action='store_true', help='JSON output')

    def chart_options(p: argparse.ArgumentParser) -> None:
        p.add_argument('observations', help='CSV with header seq,state,ttf')
        p.add_argument('--design', choices=['standard', 'generalized', 'auto'], help='Chart design override')
        p.add_argument('--scale', help='Drawing scale override (linear, sqrt, cbrt, qrt)')
        p.add_argument('--aggregate', type=int, metavar='R', help='Sum every R TTFs per state (Erlang-R chart)')

    chart = sub.add_parser('chart', help='Render the SVG chart and JSON classification')
    chart_options(chart)
    chart.add_argument('--out', help='SVG output path (default: <output_dir>/chart.svg)')
    chart.add_argument('--json', help='JSON report path (default: next to the SVG)')
    chart.add_argument('--width', type=int, help='Canvas width in pixels')
    chart.add_argument('--height', type=int, help='Canvas height in pixels')

    classify = sub.add_parser('classify', help='Classify observations')
    chart_options(classify)
    classify.add_argument('--format', choices=['table', 'json'], default='table')

    simulate = sub.add_parser('simulate', help='Generate observations')
    simulate.add_argument('--scenario', dest='config_override', help='Scenario configuration YAML')
    simulate.add_argument('--example', choices=['example1', 'example3'], help='Built-in worked scenario')
    simulate.add_argument('--seed', type=int, help='Seed override (unsigned 64-bit)')
    simulate.add_argument('--out', help='CSV output path (default: stdout)')

    aggregate = sub.add_parser('aggregate', help='Sum every r TTFs of the same state')
    aggregate.add_argument('observations', help='CSV with header seq,state,ttf')
    aggregate.add_argument('--r', type=int, required=True, help='Group size')
    aggregate.add_argument('--out', help='CSV output path (default: stdout)')

    verify = sub.add_parser('verify', help='Oracle sweep of quantiles and angles')
    verify.add_argument('--c', type=float, default=0.0027, help='False-alarm probability')
    verify.add_argument('--shapes', type=parse_shapes, default=list(GRID_SHAPES), help='Shape grid')
    verify.add_argument('--workers', type=int, help='Worker threads (default: ACC_WORKERS)')

    sweep = sub.add_parser('sweep', help='Angular limits versus shape parameter')
    sweep.add_argument('--family', required=True,
                       choices=[f.value for f in DistributionFamily if f.has_shape])
    sweep.add_argument('--shapes', type=parse_shapes, default=parse_shapes('0.5:5:0.5'),
                       help='start:stop:step or comma list')
    sweep.add_argument('--c', type=float, default=0.0027, help='False-alarm probability')
    sweep.add_argument('--format', choices=['table', 'csv'], default='table')

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, 'config_override', None):
        args.config = args.config_override

    app = ACCApplication(args)
    try:
        app.setup()
        return app.run()
    except (ACCError, ValidationError) as e:
        if app.logger:
            app.logger.error(str(e), exc_info=args.verbose)
        else:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
