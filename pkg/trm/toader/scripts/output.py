"""
Table output for the sub-commands. CSV: header row, comma separated, LF
line endings, UTF-8, every number with 17 significant digits, empty
fields for values a row does not have. JSON: a list of objects with the
same field names, null for empty fields.
"""

import sys
import csv
import json
import contextlib

from trm.toader.core import fmt

__all__ = ['emit']

@contextlib.contextmanager
def _stream(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, 'w', newline='', encoding='utf-8') as fout:
            yield fout

def _plain(value):
    # numpy scalars -> python numbers for json
    return value.item() if hasattr(value, 'item') else value

def emit(config, fieldnames, rows):
    """
    Writes rows (dictionaries keyed by fieldnames, missing keys meaning
    empty) in the format and to the destination named by the RunConfig.
    """
    with _stream(config.output_path) as fout:
        if config.output_format == 'json':
            table = [
                {name : _plain(row.get(name)) for name in fieldnames}
                for row in rows
            ]
            fout.write(json.dumps(table, indent=2) + '\n')
        else:
            writer = csv.writer(fout, lineterminator='\n')
            writer.writerow(fieldnames)
            for row in rows:
                writer.writerow([fmt(row.get(name)) for name in fieldnames])
