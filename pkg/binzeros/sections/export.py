"""Deterministic JSON/CSV rendering and atomic file output."""
import csv
import io
import os
from pathlib import Path
import tempfile

from rest_framework.renderers import JSONRenderer


def render_json(data):
    """Bytes of data as indented JSON, keys in serializer field order."""
    content = JSONRenderer().render(data, renderer_context={'indent': 2})
    return content + b'\n'


def render_csv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().encode()


def write_atomic(path, content):
    """Write bytes to path via a temporary file in the same directory."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f'.{path.name}.')
    try:
        with os.fdopen(fd, 'wb') as handle:
            handle.write(content)
        os.replace(tmp, path)
    except BaseException:
        # never leave a partial file behind
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


# --- CSV layouts ---
def zero_rows(data):
    return [(z['re'], z['im'], res)
            for z, res in zip(data['zeros'], data['residuals'])]


def curve_rows(data):
    return [(p['theta'], p['re'], p['im'], p['residual'])
            for p in data['points']]


ZERO_HEADER = ('re', 'im', 'residual')
CURVE_HEADER = ('theta', 're', 'im', 'residual')
REGION_HEADER = ('re', 'im', 'outer', 'circle', 'halfplane', 'curve')
SWEEP_HEADER = ('n', 'r', 'sup_distance', 'rate_statistic', 'singular_gap',
                'coverage')
SZEGO_HEADER = ('n', 'r', 'sup_distance', 'max_modulus', 'min_modulus')
HALFLINE_HEADER = ('n', 'r', 'max_deviation', 'min_real_margin')


def region_rows(data):
    return [
        (m['zero']['re'], m['zero']['im'], m['outer'], m['circle'],
         m['halfplane'], m['curve'])
        for m in data['margins']
    ]


def record_rows(records, header):
    return [tuple(record[key] for key in header) for record in records]
