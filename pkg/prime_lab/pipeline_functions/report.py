# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)

Reproduction of the four comparison tables (exact counts against the model predictions)
and their emission as CSV, Markdown or JSON.
"""
import dataclasses
import io
import json
import logging
import math
from importlib import resources

import pandas as pd
from joblib import Parallel, delayed

from .cache import reference_count
from .config import RunConfig
from .decorators import timed
from .errors import SieveBudgetError, ValidationError
from .pipeline_utils import TypedJSONEncoder, parse_integer
from ..basic_functions.logint import li_at_2
from ..basic_functions.models import model1_stats, model2_stats, riemann_bound, tuple_stats
from ..basic_functions.sieve import PRIMES, TRIPLETS_046, TWINS, tuple_count

logger = logging.getLogger(__name__)

table_ids = ('T1', 'T2', 'T3', 'T4')

# Column-names and -types (int: exact integers, real: 3 decimals) as printed
table_columns = {
    'T1': [('pi', 'int'), ('li_minus_pi', 'int'), ('sigma_model1', 'int'), ('sigma_model2', 'int'),
           ('riemann_bound', 'int')],
    'T2': [('sigma_model1', 'int'), ('x_over_li', 'real'), ('x_over_li_minus_sigma', 'real'),
           ('gap_difference', 'real'), ('z_deviation', 'real')],
    'T3': [('sigma_j', 'int'), ('m_h', 'real'), ('h_plus_sigma', 'real'), ('h_minus_sigma', 'real'),
           ('count', 'int'), ('actual_gap', 'real'), ('gap_deviation', 'real')],
}
table_columns['T4'] = table_columns['T3']

# Pattern and number of standard deviations of the tuple-tables
tuple_tables = {'T3': (TWINS, 1), 'T4': (TRIPLETS_046, 3)}

# Acceptable absolute deviation of real cells from the printed values
published_tolerance = {'T1': 0, 'T2': 0.0015, 'T3': 0.01, 'T4': 0.05}

real_decimals = 3


@dataclasses.dataclass
class TableRow:
    table_id: str
    x: int
    cells: dict
    exact_available: bool
    notes: list = dataclasses.field(default_factory=list)

    def __post_init__(self):
        if self.table_id not in table_ids:
            raise ValidationError(f'Unknown table {self.table_id}')
        names = [name for name, _ in table_columns[self.table_id]]
        if list(self.cells) != names:
            raise ValidationError(f'Cells of {self.table_id} have to be {names}, not {list(self.cells)}')


def _typed_cell(value, kind):
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return None
    if kind == 'int':
        return int(value)

    return round(float(value), real_decimals)


def _make_row(table_id, x, values, exact_available, notes):
    cells = {name: _typed_cell(values.get(name), kind) for name, kind in table_columns[table_id]}

    return TableRow(table_id, int(x), cells, exact_available, notes)


def lookup_count(pattern, x, config, cache=None):
    """Exact count from sieve (within budget) or cache, then from the reference-table, else None"""
    try:
        return tuple_count(pattern, x, budget=config.sieve_budget, segment_size=config.segment_size,
                           cache=cache, n_jobs=config.n_jobs)
    except SieveBudgetError as err:
        record = reference_count(x, pattern)
        if record is None:
            logger.warning(f'No exact count for pattern {pattern} up to {x}: {err}')
        return record


def _provenance_notes(record):
    if record is None:
        return ['exact count not available']
    if record.provenance.value != 'sieved':
        return [f'count taken from {record.provenance.value} values']

    return list()


def model_values(table_id, x, config):
    """The cells of a row which follow from the models alone, without an exact count

    The standard deviations of Table 1 and 2 are printed as integer parts, the sigma_J of
    the tuple-tables to the nearest integer.

    Returns
    -------
    values : dict
    stats : ModelStats
        The statistics of the first model (T1, T2) or of the tuple model (T3, T4).
    """
    tol = config.table_tol
    if table_id == 'T1':
        model1 = model1_stats(x, tol)
        return {'sigma_model1': math.floor(model1.sigma),
                'sigma_model2': math.floor(model2_stats(x, tol).sigma),
                'riemann_bound': math.floor(riemann_bound(x, config.riemann_pi))}, model1
    elif table_id == 'T2':
        model1 = model1_stats(x, tol)
        x_over_li = x / model1.mean
        x_over_li_minus_sigma = x / (model1.mean - model1.sigma)
        return {'sigma_model1': math.floor(model1.sigma),
                'x_over_li': x_over_li,
                'x_over_li_minus_sigma': x_over_li_minus_sigma,
                'z_deviation': x_over_li_minus_sigma - x_over_li}, model1

    pattern, _ = tuple_tables[table_id]
    stats = tuple_stats(pattern, x, tol, config.singular_tol)

    return {'sigma_j': round(stats.sigma), 'm_h': x / stats.mean}, stats


def table1_row(x, config, cache=None):
    values, model1 = model_values('T1', x, config)
    record = lookup_count(PRIMES, x, config, cache)
    if record is not None:
        values['pi'] = record.count
        # Difference to the conventional li(x) = Li(x) + li(2)
        values['li_minus_pi'] = round(model1.mean + li_at_2 - record.count)

    return _make_row('T1', x, values, record is not None, _provenance_notes(record))


def table2_row(x, config, cache=None):
    values, _ = model_values('T2', x, config)
    record = lookup_count(PRIMES, x, config, cache)
    notes = _provenance_notes(record)
    x_over_li = values['x_over_li']
    if record is not None and record.count > 0:
        values['gap_difference'] = x / record.count - x_over_li
        if abs(values['gap_difference']) > values['z_deviation']:
            notes.append('|x/pi(x) - x/Li(x)| exceeds the deviation of Z at Li(x) - sigma')

    return _make_row('T2', x, values, record is not None, notes)


def tuple_table_row(table_id, x, config, cache=None):
    pattern, n_sigma = tuple_tables[table_id]
    values, stats = model_values(table_id, x, config)
    record = lookup_count(pattern, x, config, cache)
    notes = _provenance_notes(record)
    sigma_j = values['sigma_j']
    m_h = values['m_h']
    values['h_plus_sigma'] = x / (stats.mean + n_sigma * sigma_j)
    if n_sigma * sigma_j < stats.mean:
        values['h_minus_sigma'] = x / (stats.mean - n_sigma * sigma_j)
    else:
        notes.append(f'{n_sigma} * sigma_J reaches M_J, the interval is degenerate')

    if record is not None and record.count > 0:
        actual_gap = x / record.count
        values.update(count=record.count, actual_gap=actual_gap, gap_deviation=actual_gap - m_h)
        upper = values.get('h_minus_sigma', math.inf)
        if not values['h_plus_sigma'] <= actual_gap <= upper:
            notes.append(f'actual mean gap lies outside the +-{n_sigma} sigma_J interval')
    elif record is not None:
        values['count'] = 0
        notes.append('no tuples up to x, the actual mean gap is undefined')

    return _make_row(table_id, x, values, record is not None, notes)


row_functions = {'T1': table1_row, 'T2': table2_row,
                 'T3': lambda x, config, cache: tuple_table_row('T3', x, config, cache),
                 'T4': lambda x, config, cache: tuple_table_row('T4', x, config, cache)}


def normalize_table_id(table_id):
    table_id = str(table_id).upper()
    if not table_id.startswith('T'):
        table_id = f'T{table_id}'
    if table_id not in table_ids:
        raise ValidationError(f'Unknown table {table_id}, choose one of {table_ids}')

    return table_id


@timed
def build_table(table_id, xs=None, config=None, cache=None):
    """Compute the rows of one table

    Parameters
    ----------
    table_id : str | int
        'T1' to 'T4' (or 1 to 4).
    xs : list of int | None
        The limits of the rows, defaults to the configured list.
    config : RunConfig | None
    cache : CountCache | None

    Returns
    -------
    rows : list of TableRow
    """
    table_id = normalize_table_id(table_id)
    config = config or RunConfig.from_settings()
    if xs is None:
        xs = config.table_xs[int(table_id[1])]
    xs = [parse_integer(x) for x in xs]
    if len(xs) == 0:
        raise ValidationError('A table needs at least one x')

    row_func = row_functions[table_id]
    if config.n_jobs == 1 or len(xs) == 1:
        rows = [row_func(x, config, cache) for x in xs]
    else:
        rows = Parallel(n_jobs=config.n_jobs, prefer='threads')(delayed(row_func)(x, config, cache) for x in xs)

    printed_issues = check_printed_consistency(config, [(table_id, row.x) for row in rows])
    for row in rows:
        for issue_table, issue_x, message in printed_issues:
            if issue_table == row.table_id and issue_x == row.x:
                row.notes.append(f'printed row: {message}')
        logger.info(f'{table_id} row at x={row.x}: {row.cells}')

    return rows


def table1(xs=None, config=None, cache=None):
    return build_table('T1', xs, config, cache)


def table2(xs=None, config=None, cache=None):
    return build_table('T2', xs, config, cache)


def table3(xs=None, config=None, cache=None):
    return build_table('T3', xs, config, cache)


def table4(xs=None, config=None, cache=None):
    return build_table('T4', xs, config, cache)


def _check_rows(rows):
    if len(rows) == 0:
        raise ValidationError('No rows to emit')
    if len({row.table_id for row in rows}) != 1:
        raise ValidationError('Rows of different tables can not be emitted together')


def _format_cell(value, kind):
    if value is None:
        return ''
    if kind == 'int':
        return str(value)

    return f'{value:.{real_decimals}f}'


def rows_to_frame(rows):
    """String-formatted DataFrame with the columns x, <table-columns>, exact_available"""
    _check_rows(rows)
    schema = table_columns[rows[0].table_id]
    records = list()
    for row in rows:
        record = {'x': str(row.x)}
        record.update({name: _format_cell(row.cells[name], kind) for name, kind in schema})
        record['exact_available'] = str(row.exact_available)
        records.append(record)

    return pd.DataFrame(records, columns=['x'] + [name for name, _ in schema] + ['exact_available'])


def _note_lines(rows):
    return [f'x={row.x}: {note}' for row in rows for note in row.notes]


def to_csv(rows):
    """CSV with leading '# ' comment lines for the table-id and the row notes"""
    body = rows_to_frame(rows).to_csv(index=False, lineterminator='\n')
    comments = [f'# table: {rows[0].table_id}'] + [f'# {line}' for line in _note_lines(rows)]

    return '\n'.join(comments) + '\n' + body


def to_markdown(rows):
    """Pipe-table with the notes as footnotes below"""
    frame = rows_to_frame(rows)
    lines = [f'### {rows[0].table_id}', '', frame.to_markdown(index=False, disable_numparse=True)]
    notes = _note_lines(rows)
    if notes:
        lines.append('')
        lines.extend(f'[^{idx}]: {note}' for idx, note in enumerate(notes, 1))

    return '\n'.join(lines) + '\n'


def to_json(rows):
    _check_rows(rows)
    return json.dumps([dataclasses.asdict(row) for row in rows], cls=TypedJSONEncoder, indent=2) + '\n'


def emit(rows, output_format='csv'):
    if output_format == 'csv':
        return to_csv(rows)
    elif output_format == 'markdown':
        return to_markdown(rows)
    elif output_format == 'json':
        return to_json(rows)
    else:
        raise ValidationError(f'Unknown output-format {output_format}')


def _parse_cell(text, kind):
    text = str(text).strip()
    if text == '' or text.lower() == 'nan':
        return None
    if kind == 'int':
        return int(text)

    return float(text)


def _rows_from_frame(table_id, frame, notes):
    frame.columns = [str(c).strip() for c in frame.columns]
    schema = table_columns[table_id]
    rows = list()
    for _, record in frame.iterrows():
        x = int(str(record['x']).strip())
        cells = {name: _parse_cell(record[name], kind) for name, kind in schema}
        exact_available = str(record['exact_available']).strip() == 'True'
        rows.append(TableRow(table_id, x, cells, exact_available, notes.get(x, list())))

    return rows


def _parse_note(line, notes):
    key, _, note = line.partition(': ')
    if key.startswith('x='):
        notes.setdefault(int(key[2:]), list()).append(note)


def rows_from_csv(text):
    """Parse rows emitted by to_csv"""
    table_id = None
    notes = dict()
    for line in text.splitlines():
        if not line.startswith('# '):
            continue
        content = line[2:]
        if content.startswith('table: '):
            table_id = content[len('table: '):].strip()
        else:
            _parse_note(content, notes)
    if table_id is None:
        raise ValidationError('The CSV does not name its table')
    frame = pd.read_csv(io.StringIO(text), comment='#', dtype=str, keep_default_na=False)

    return _rows_from_frame(table_id, frame, notes)


def rows_from_markdown(text):
    """Parse rows emitted by to_markdown"""
    lines = text.splitlines()
    headings = [line for line in lines if line.startswith('### ')]
    if not headings:
        raise ValidationError('The Markdown does not name its table')
    table_id = headings[0][4:].strip()
    table_lines = [line for line in lines if line.startswith('|')]
    # The second line only holds the alignment
    del table_lines[1]
    frame = pd.read_csv(io.StringIO('\n'.join(table_lines)), sep='|', dtype=str, keep_default_na=False)
    frame = frame.iloc[:, 1:-1]
    frame = frame.apply(lambda column: column.str.strip())
    notes = dict()
    for line in lines:
        if line.startswith('[^'):
            _parse_note(line.split(']: ', 1)[1], notes)

    return _rows_from_frame(table_id, frame, notes)


def load_published_values():
    with resources.path('prime_lab.pipeline_resources', 'published_values.csv') as pub_path:
        return pd.read_csv(str(pub_path), sep=';', dtype={'table_id': str, 'x': 'int64', 'column': str,
                                                            'value': 'float64'})


def compare_published(rows):
    """Compare computed cells with the printed ones

    Returns
    -------
    comparison : pandas.DataFrame
        Columns table_id, x, column, published, computed, difference, tolerance, match.
    """
    published = load_published_values()
    records = list()
    for row in rows:
        kinds = dict(table_columns[row.table_id])
        match_rows = published[(published['table_id'] == row.table_id) & (published['x'] == row.x)]
        for _, pub in match_rows.iterrows():
            computed = row.cells.get(pub['column'])
            tolerance = 0 if kinds[pub['column']] == 'int' else published_tolerance[row.table_id]
            if computed is None:
                difference, match = math.nan, False
            else:
                difference = computed - pub['value']
                match = abs(difference) <= tolerance + 1e-9
            records.append({'table_id': row.table_id, 'x': row.x, 'column': pub['column'],
                            'published': pub['value'], 'computed': computed, 'difference': difference,
                            'tolerance': tolerance, 'match': match})

    return pd.DataFrame(records, columns=['table_id', 'x', 'column', 'published', 'computed', 'difference',
                                          'tolerance', 'match'])


def _internal_issues(published):
    issues = list()
    printed = {key: dict(zip(group['column'], group['value']))
               for key, group in published.groupby(['table_id', 'x'])}
    for (table_id, x), cells in printed.items():
        x = int(x)
        if table_id == 'T2' and ('T1', x) in printed:
            sigma_t1 = printed[('T1', x)]['sigma_model1']
            if cells['sigma_model1'] != sigma_t1:
                issues.append((table_id, x, f'printed sigma {cells["sigma_model1"]:g} differs from '
                                            f'{sigma_t1:g} in T1'))
        if table_id not in tuple_tables:
            continue
        if not cells['h_plus_sigma'] < cells['m_h'] < cells['h_minus_sigma']:
            issues.append((table_id, x, f'endpoints {cells["h_plus_sigma"]:.3f} and '
                                        f'{cells["h_minus_sigma"]:.3f} do not enclose M_H {cells["m_h"]:.3f}'))
        recomputed = cells['actual_gap'] - cells['m_h']
        if abs(recomputed - cells['gap_deviation']) > 0.002:
            issues.append((table_id, x, f'printed deviation {cells["gap_deviation"]:g} differs from '
                                        f'x/count - M_H = {recomputed:.3f}'))

    return issues


def _model_issues(published, config):
    issues = list()
    for (table_id, x), group in published.groupby(['table_id', 'x']):
        x = int(x)
        kinds = dict(table_columns[table_id])
        values, _ = model_values(table_id, x, config)
        for column, printed in zip(group['column'], group['value']):
            if column not in values:
                continue
            tolerance = 0 if kinds[column] == 'int' else published_tolerance[table_id]
            computed = _typed_cell(values[column], kinds[column])
            if abs(computed - printed) <= tolerance + 1e-9:
                continue
            message = f'printed {column} {printed:g} differs from the recomputed {computed:g}'
            if column == 'sigma_j' and x >= 30:
                # A column shifted by one row repeats the value of the previous decade
                previous, _ = model_values(table_id, x // 10, config)
                if previous['sigma_j'] == printed:
                    message += f', it equals sigma_J at x={x // 10}'
            issues.append((table_id, x, message))

    return issues


def check_printed_consistency(config=None, rows=None):
    """Inconsistencies of the printed tables

    Without a config only the printed values are checked against each other: the endpoint-ordering
    and the deviation-column of the tuple-tables and the sigma-column of Table 2 against Table 1.
    With a config the model-only cells (standard deviations, Riemann bound, x / Li(x), M_H) are
    also recomputed and compared within the published tolerances.

    Parameters
    ----------
    config : RunConfig | None
    rows : list of tuple | None
        (table_id, x) pairs to restrict the check to, defaults to all printed rows.

    Returns
    -------
    issues : list of tuple
        (table_id, x, message) for every inconsistency found.
    """
    published = load_published_values()
    issues = _internal_issues(published)
    if rows is not None:
        wanted = {(table_id, int(x)) for table_id, x in rows}
        issues = [issue for issue in issues if issue[:2] in wanted]
        keys = list(zip(published['table_id'], published['x'].astype(int)))
        published = published[[key in wanted for key in keys]]
    if config is not None and len(published) > 0:
        issues += _model_issues(published, config)

    return issues
