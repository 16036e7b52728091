# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
cayley-rep 命令行。

退出码：0 适用 / 1 不适用 / 2 用法、输入或计算规模错误。报告写到 stdout，日志写到 stderr。
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .analysis.cayleynum import (
    fit_loglog_slope,
    pade_order_probe,
    random_direction,
    residual_survey,
)
from .analysis.classify import classify, full_report
from .config.settings import (
    DEFAULT_SEED,
    LOG_LEVEL,
    PADE_SCALES,
    RESIDUAL_NORM,
    RESIDUAL_SEEDS,
    SEARCH_BOUND,
)
from .core.errors import OrbitTooLargeError, SeriesConvergenceError
from .core.pipeline import ALL_CRITERIA, DEFAULT_CRITERIA, ApplicabilityPipeline
from .io.codec import diagram_to_json, dumps, envelope, parse_coeffs, parse_weight, rep_to_json
from .io.plot import write_diagram_svg
from .lie.cayleycfg import is_cayley_configuration
from .lie.rootsys import FAMILIES, from_fundamental, resolve_root_system
from .lie.weightlat import weight_diagram
from .reps.catalog import build_from_label
from .storage.store import CSV_COLUMNS, JsonStore, classification_csv_rows

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


def setup_logging(log_file: Optional[Path] = None) -> None:
    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)

    formatter = logging.Formatter("%(asctime)s [%(levelname)s] %(message)s")

    # stdout 留给报告
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setLevel(getattr(logging, LOG_LEVEL, logging.INFO))
    stream_handler.setFormatter(formatter)
    handlers: List[logging.Handler] = [stream_handler]

    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        handlers.append(file_handler)

    root_logger.handlers = handlers


def _add_weight_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", required=True, choices=FAMILIES, help="根系类型")
    parser.add_argument("--rank", required=True, type=int, help="秩")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--weight", help="最高权的 L 坐标，如 1/2,1/2,1/2,1/2")
    group.add_argument("--coeffs", help="最高权的基本权系数，如 0,1,0")


def _add_common(parser: argparse.ArgumentParser, seed: bool = False) -> None:
    parser.add_argument("--json", action="store_true", help="输出 JSON 报告")
    if seed:
        parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="随机探测种子")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cayley-rep", description="判定 Cayley 变换对李群表示的适用性")
    parser.add_argument("--log-file", type=Path, default=None, help="额外写入 DEBUG 级日志的文件")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-config", help="判定最高权是否为 Cayley 构型")
    _add_weight_args(p)
    _add_common(p)
    p.add_argument("--short-circuit", action="store_true", help="轨道条件失败时跳过支撑计算")
    p.set_defaults(handler=cmd_check_config)

    p = sub.add_parser("verify", help="对目录表示执行精确判据")
    p.add_argument("--label", required=True, help="目录标签，如 spin8-plus")
    p.add_argument(
        "--criteria",
        default=",".join(DEFAULT_CRITERIA),
        help=f"逗号分隔的判据，可选 {','.join(ALL_CRITERIA)}",
    )
    _add_common(p, seed=True)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("classify", help="有界搜索分类")
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--bound", type=int, default=SEARCH_BOUND)
    p.add_argument("--family", choices=FAMILIES, help="只搜索一个根系（需同时给出 --rank）")
    p.add_argument("--rank", type=int)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--all-rows", action="store_true", help="输出全部候选而不只是真行")
    p.add_argument("--output-dir", type=Path, help="同时把 JSON / CSV 写入该目录")
    _add_common(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("residual", help="对数级数残差统计")
    p.add_argument("--label", required=True)
    p.add_argument("--seeds", type=int, default=RESIDUAL_SEEDS)
    p.add_argument("--norm", type=float, default=RESIDUAL_NORM)
    _add_common(p, seed=True)
    p.set_defaults(handler=cmd_residual)

    p = sub.add_parser("pade", help="C(tu/2) 与 exp(tu) 的误差阶")
    p.add_argument("--label", required=True)
    p.add_argument("--directions", type=int, default=1, help="随机方向个数")
    _add_common(p, seed=True)
    p.set_defaults(handler=cmd_pade)

    p = sub.add_parser("rep", help="目录表示工具")
    rep_sub = p.add_subparsers(dest="rep_command", required=True)
    dump = rep_sub.add_parser("dump", help="导出矩阵实现")
    dump.add_argument("--label", required=True)
    dump.add_argument("--format", choices=("json", "text"), default="text")
    _add_common(dump)
    dump.set_defaults(handler=cmd_rep_dump)

    p = sub.add_parser("diagram", help="导出权图")
    _add_weight_args(p)
    _add_common(p)
    p.set_defaults(handler=cmd_diagram)

    p = sub.add_parser("diagram-svg", help="绘制秩 ≤ 2 的权图")
    _add_weight_args(p)
    p.add_argument("--out", type=Path, required=True, help="SVG 输出路径")
    _add_common(p)
    p.set_defaults(handler=cmd_diagram_svg)

    return parser


def _resolve_weight(args: argparse.Namespace):
    resolved = resolve_root_system(args.family, args.rank)
    rs = resolved.system
    if args.weight is not None:
        return rs, resolved.translate(parse_weight(args.weight))
    if resolved.redirected:
        raise ValueError(f"{args.family}{args.rank} 经同构重定向到 {rs.name}，请用 --weight 给出 L 坐标")
    coeffs = parse_coeffs(args.coeffs)
    return rs, from_fundamental(coeffs, rs)


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _fmt_weight(weight) -> str:
    return "(" + ", ".join(str(x) for x in weight) + ")"


def cmd_check_config(args: argparse.Namespace) -> int:
    rs, highest = _resolve_weight(args)
    report = is_cayley_configuration(highest, rs, short_circuit=args.short_circuit)
    if args.json:
        _emit(dumps(envelope("check-config", report, ["geometric"])))
    else:
        lines = [
            f"根系: {rs.name}",
            f"最高权: {_fmt_weight(report.highest)}",
            f"轨道大小: {report.orbit_size}（需要 {2 * report.rank_needed}）",
            f"轨道秩: {report.orbit_rank}（需要 {report.rank_needed}）",
            f"关于原点对称: {report.symmetric_about_origin}",
        ]
        if report.support_minus_orbit is not None:
            extra = ", ".join(_fmt_weight(w) for w in report.support_minus_orbit) or "∅"
            suffix = "（仅支配代表元）" if report.support_up_to_weyl else ""
            lines.append(f"轨道外的权{suffix}: {extra}")
        lines.append(f"Cayley 构型: {report.verdict}")
        if report.witness is not None:
            lines.append(f"反例权: {_fmt_weight(report.witness)}")
        _emit("\n".join(lines))
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_verify(args: argparse.Namespace) -> int:
    criteria = [c.strip() for c in args.criteria.split(",") if c.strip()]
    pipeline = ApplicabilityPipeline(criteria=criteria, seed=args.seed)
    report = pipeline.run(args.label)
    if args.json:
        _emit(dumps(envelope("verify", report, report.criteria)))
    else:
        lines = [f"表示: {report.label}", f"判据: {', '.join(report.criteria)}"]
        if report.geometric is not None:
            lines.append(f"Cayley 构型: {report.geometric.verdict}")
        if report.exact is not None:
            lines.append(f"幂张成: {report.exact.verdict}（三元组 {report.exact.triples_checked} 个）")
            if report.exact.failing_triple is not None:
                lines.append(f"失败三元组: {report.exact.failing_triple}")
        if report.cartan is not None:
            lines.append(f"Cartan S³ 封闭: {report.cartan}")
        if report.odd_powers is not None:
            lines.append(f"奇次幂抽样: {report.odd_powers}")
        if report.numeric is not None:
            lines.append(f"残差中位数: {report.numeric.median_residual:.3e}")
        lines.append(f"结论: {report.final_verdict}（判据一致: {report.agreement}）")
        _emit("\n".join(lines))
    return EXIT_OK if report.final_verdict else EXIT_FALSE


def cmd_classify(args: argparse.Namespace) -> int:
    if args.family is not None:
        if args.rank is None:
            raise ValueError("--family 需要同时给出 --rank")
        rows = classify(args.family, args.rank, args.bound)
    else:
        rows = full_report(args.max_rank, args.bound)
    if args.output_dir is not None:
        JsonStore(output_dir=args.output_dir).write_classification(rows)
    shown = rows if args.all_rows else [row for row in rows if row.verdict]

    if args.json or args.format == "json":
        _emit(dumps(envelope("classify", shown, ["geometric"])))
    elif args.format == "csv":
        lines = [",".join(CSV_COLUMNS)]
        lines.extend(",".join(cells) for cells in classification_csv_rows(shown))
        _emit("\n".join(lines))
    else:
        lines = [f"{'根系':<6}{'系数':<14}{'最高权':<28}{'名称':<16}紧实形式"]
        for row in shown:
            lines.append(
                f"{row.family}{row.rank:<5}{' '.join(map(str, row.coeffs)):<14}"
                f"{_fmt_weight(row.highest):<28}{row.identification or '-':<16}{row.compact_form or '-'}"
            )
        lines.append(f"共 {sum(row.verdict for row in rows)} 个真行 / {len(rows)} 个候选")
        _emit("\n".join(lines))
    return EXIT_OK


def cmd_residual(args: argparse.Namespace) -> int:
    rep = build_from_label(args.label)
    summary = residual_survey(rep, seeds=args.seeds, norm=args.norm, base_seed=args.seed)
    if args.json:
        _emit(dumps(envelope("residual", summary, ["numeric"])))
    else:
        _emit(
            f"表示: {rep.label}\n方向数: {summary.seeds}, ‖u‖ = {summary.norm}\n"
            f"残差中位数: {summary.median_residual:.3e}\n残差最大值: {summary.max_residual:.3e}\n"
            f"结论: {summary.verdict}"
        )
    return EXIT_OK if summary.verdict else EXIT_FALSE


def cmd_pade(args: argparse.Namespace) -> int:
    rep = build_from_label(args.label)
    probes = []
    for k in range(args.directions):
        pairs = pade_order_probe(rep, random_direction(rep, args.seed + k), PADE_SCALES)
        positive = [e for _, e in pairs if e > 0]
        slope = fit_loglog_slope(pairs) if len(positive) >= 2 else None
        probes.append({"seed": args.seed + k, "pairs": pairs, "slope": slope})
    if args.json:
        _emit(dumps(envelope("pade", {"label": rep.label, "probes": probes})))
    else:
        lines = [f"表示: {rep.label}"]
        for probe in probes:
            lines.append(f"种子 {probe['seed']}:")
            lines.extend(f"  t={t:<8} err={e:.3e}" for t, e in probe["pairs"])
            slope = probe["slope"]
            lines.append(f"  斜率: {slope:.3f}" if slope is not None else "  斜率: 无（误差为 0）")
        _emit("\n".join(lines))
    return EXIT_OK


def cmd_rep_dump(args: argparse.Namespace) -> int:
    rep = build_from_label(args.label)
    if args.json or args.format == "json":
        _emit(dumps(envelope("rep dump", rep_to_json(rep))))
    else:
        lines = [
            f"表示: {rep.label}（{rep.description}）",
            f"dim V = {rep.dim_V}, dim 𝔤 = {len(rep.algebra_basis)}, dim 𝔥 = {len(rep.cartan_basis)}",
            "权: " + ", ".join(_fmt_weight(w) for w in rep.weight_labels),
        ]
        _emit("\n".join(lines))
    return EXIT_OK


def cmd_diagram(args: argparse.Namespace) -> int:
    rs, highest = _resolve_weight(args)
    diagram = weight_diagram(highest, rs)
    if args.json:
        _emit(dumps(envelope("diagram", diagram_to_json(diagram))))
    else:
        lines = [f"{rs.name} 最高权 {_fmt_weight(diagram.highest)}, dim = {diagram.dimension}"]
        lines.extend(
            f"  {_fmt_weight(w)}  m={m}" for w, m in sorted(diagram.mult.items(), reverse=True)
        )
        _emit("\n".join(lines))
    return EXIT_OK


def cmd_diagram_svg(args: argparse.Namespace) -> int:
    rs, highest = _resolve_weight(args)
    diagram = weight_diagram(highest, rs)
    path = write_diagram_svg(diagram, rs, args.out)
    if args.json:
        _emit(dumps(envelope("diagram-svg", {"out": str(path), "points": len(diagram.mult)})))
    else:
        _emit(f"已写入 {path}（{len(diagram.mult)} 个点）")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_ERROR
    setup_logging(args.log_file)
    try:
        return args.handler(args)
    except (ValueError, OrbitTooLargeError, SeriesConvergenceError) as exc:
        logger.error(str(exc))
        sys.stderr.write(f"错误: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
