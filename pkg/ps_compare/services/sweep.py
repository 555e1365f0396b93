"""Grid sweeps: one exhaustive comparison per ``(family, n, m, i, j)`` cell."""
import csv
import io
import logging
from dataclasses import asdict, dataclass

from core.constants import RuleFamily
from ps_compare.services.cache import cached_comparison
from ps_compare.services.comparison import check_scan_budget, compare_exhaustive
from scoring.services.rules import RuleSpec

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    'family_f', 'k_f', 'family_g', 'k_g', 'n', 'm',
    'relation', 'profiles_scanned', 'manip_f', 'manip_g', 'manip_both',
)


@dataclass(frozen=True)
class SweepCell:
    """``f`` is the rule with the larger parameter ``j``; ``g`` has ``i``."""

    family: str
    n: int
    m: int
    i: int
    j: int
    anonymize: bool = True
    budget: int = None
    use_cache: bool = True

    def rules(self):
        return RuleSpec(self.family, self.j), RuleSpec(self.family, self.i)

    def to_json(self):
        return asdict(self)


def sweep_cells(families, ns, ms, i_range=None, j_range=None, **options):
    """Cells in the order rows are written: family, n, m, i, j."""
    cells = []
    for family in families:
        for n in ns:
            for m in ms:
                for j in range(2, m):
                    if j_range is not None and j not in j_range:
                        continue
                    for i in range(1, j):
                        if i_range is not None and i not in i_range:
                            continue
                        cells.append(SweepCell(RuleFamily(family).value, n, m, i, j, **options))
    return cells


def compute_cell(cell):
    """One CSV row as a dict; module-level so it pickles for the process pool."""
    f, g = cell.rules()
    check_scan_budget(cell.n, cell.m, cell.anonymize, cell.budget)

    def compute():
        return compare_exhaustive(f, g, cell.n, cell.m, anonymize=cell.anonymize, budget=cell.budget).to_json()

    report = cached_comparison(f, g, cell.n, cell.m, compute, anonymize=cell.anonymize, use_cache=cell.use_cache)
    return {
        'family_f': cell.family,
        'k_f': cell.j,
        'family_g': cell.family,
        'k_g': cell.i,
        'n': cell.n,
        'm': cell.m,
        'relation': report['relation'],
        **report['counts'],
    }


def rows_to_csv(rows):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator='\n')
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()
