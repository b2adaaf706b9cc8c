"""Classification-style evaluation of the recommender.

Treats an area-labeled corpus as ground truth: sample authors whose papers
all sit in one area, recommend for each of them, and count how many of the
returned papers land back in the author's own area. The confusion matrix is
reported per area together with a machine-readable key/value block.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..corpus.names import AuthorId, AuthorTable
from ..corpus.records import PaperRecord
from ..errors import InsufficientAuthors
from ..rec.engine import RecommendEngine
from ..rec.matrix import RatingMatrix

UNLABELED = "(none)"

_FOOTNOTE = (
    "note: cross-area recommendations are not necessarily errors; "
    "research areas overlap."
)


@dataclass
class EvalReport:
    """Confusion matrix plus the configuration that produced it."""

    row_areas: tuple[str, ...]
    col_areas: tuple[str, ...]
    counts: dict[str, dict[str, int]]
    researchers: dict[str, int]
    per_area_accuracy: dict[str, float]
    overall_accuracy: float
    top_n: int
    seed: int
    strategy: str = "naive"
    extras: dict[str, str] = field(default_factory=dict)

    def render_table(self) -> str:
        """Human-readable aligned table with per-row and overall accuracy."""
        rows = []
        header = ["researchers", *self.col_areas, "accuracy"]
        for area in self.row_areas:
            label = f"{area} ({self.researchers[area]})"
            cells = [str(self.counts[area][col]) for col in self.col_areas]
            rows.append([label, *cells, f"{self.per_area_accuracy[area] * 100:.2f}%"])
        widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
        lines = []
        for row in [header, *rows]:
            first = row[0].ljust(widths[0])
            rest = [cell.rjust(widths[i + 1]) for i, cell in enumerate(row[1:])]
            lines.append("  ".join([first, *rest]).rstrip())
        lines.append(f"overall accuracy: {self.overall_accuracy * 100:.2f}%")
        lines.append(_FOOTNOTE)
        return "\n".join(lines)

    def machine_lines(self) -> list[str]:
        """Line-delimited key<TAB>value pairs covering config and counts."""
        lines = [
            f"config.strategy\t{self.strategy}",
            f"config.top_n\t{self.top_n}",
            f"config.seed\t{self.seed}",
            f"config.researchers\t{sum(self.researchers.values())}",
        ]
        lines.extend(f"config.{key}\t{value}" for key, value in sorted(self.extras.items()))
        for area in self.row_areas:
            lines.append(f"researchers.{area}\t{self.researchers[area]}")
        for area in self.row_areas:
            for col in self.col_areas:
                lines.append(f"count.{area}.{col}\t{self.counts[area][col]}")
        for area in self.row_areas:
            lines.append(f"accuracy.{area}\t{self.per_area_accuracy[area]:.6f}")
        lines.append(f"accuracy.overall\t{self.overall_accuracy:.6f}")
        return lines

    def render(self) -> str:
        return self.render_table() + "\n\n" + "\n".join(self.machine_lines())


def select_eval_authors(
    matrix: RatingMatrix,
    records: list[PaperRecord],
    authors: AuthorTable,
    per_area: int,
    seed: int,
) -> dict[str, list[AuthorId]]:
    """Sample qualifying authors per labeled area.

    Qualifying means at least two papers, all carrying the same area label.
    Sampling is seeded and applied to an id-sorted pool, so a fixed corpus
    and seed always select the same authors.
    """
    area_of = {record.id: record.area for record in records}
    labeled_areas = sorted({record.area for record in records if record.area})
    buckets: dict[str, list[int]] = {area: [] for area in labeled_areas}
    for author_id in sorted(matrix.by_author):
        papers = matrix.papers_of(author_id)
        if len(papers) < 2:
            continue
        paper_areas = {area_of[paper] for paper in papers}
        if len(paper_areas) != 1:
            continue
        area = next(iter(paper_areas))
        if area:
            buckets[area].append(author_id)

    rng = random.Random(seed)
    selected: dict[str, list[AuthorId]] = {}
    for area in labeled_areas:
        pool = buckets[area]
        if len(pool) < per_area:
            raise InsufficientAuthors(area=area, wanted=per_area, available=len(pool))
        selected[area] = [authors.by_id(i) for i in rng.sample(pool, per_area)]
    return selected


def run_classification_eval(
    engine: RecommendEngine,
    per_area: int,
    top_n: int,
    seed: int,
    strategy: str = "naive",
) -> EvalReport:
    """Recommend for sampled single-area authors and tally hit areas."""
    selected = select_eval_authors(
        engine.matrix, engine.records, engine.authors, per_area, seed
    )
    area_of = {record.id: record.area or UNLABELED for record in engine.records}
    row_areas = tuple(sorted(selected))
    col_areas = tuple(sorted({area_of[record.id] for record in engine.records}))
    counts = {row: {col: 0 for col in col_areas} for row in row_areas}

    for row in row_areas:
        for author in selected[row]:
            for rec in engine.recommend(author, top_n, strategy=strategy):
                counts[row][area_of[rec.paper]] += 1

    per_area_accuracy = {}
    for row in row_areas:
        total = sum(counts[row].values())
        hits = counts[row].get(row, 0)
        per_area_accuracy[row] = hits / total if total else 0.0
    grand_total = sum(sum(r.values()) for r in counts.values())
    grand_hits = sum(counts[row].get(row, 0) for row in row_areas)

    return EvalReport(
        row_areas=row_areas,
        col_areas=col_areas,
        counts=counts,
        researchers={row: len(selected[row]) for row in row_areas},
        per_area_accuracy=per_area_accuracy,
        overall_accuracy=grand_hits / grand_total if grand_total else 0.0,
        top_n=top_n,
        seed=seed,
        strategy=strategy,
        extras={"per_area": str(per_area)},
    )
