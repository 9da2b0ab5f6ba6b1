"""Write-once store of tilting models keyed by (lam, context).

Entries live in memory and, given a directory, in a sqlite table with a
sha256 digest per payload. A payload that fails its digest or does not
decode is dropped and rebuilt.
"""

import os
import json
import hashlib

import pandas as pd
import sqlalchemy as sql
import bittensor as bt

from .const import CACHE_DB, CACHE_TABLE
from .errors import CacheCorrupted, InvalidInput
from .linalg import Matrix
from .modules import WeightModule
from .tilting import TiltingModel


def _matrix_json(m):
    return [[i, j, x.to_text()] for i, j, x in sorted(m.items(), key=lambda t: t[:2])]


def _matrix_from_json(entries, n, ctx):
    return Matrix.from_entries(n, n, ctx, ((i, j, ctx.parse(x)) for i, j, x in entries))


def encode_model(model):
    T = model.module
    return {
        'lam': model.lam,
        'context': model.ctx.label,
        'top': model.top,
        'weyl': model.weyl,
        'peeled': {str(k): v for k, v in sorted(model.peeled.items())},
        'weights': list(T.weights),
        'E': [_matrix_json(m) for m in T.E],
        'F': [_matrix_json(m) for m in T.F],
        'form': _matrix_json(T.form) if T.form is not None else None,
    }


def decode_model(data, ctx):
    if data.get('context') != ctx.label:
        raise CacheCorrupted(f"entry for {data.get('context')} read as {ctx.label}")
    n = len(data['weights'])
    try:
        E = [_matrix_from_json(m, n, ctx) for m in data['E']]
        F = [_matrix_from_json(m, n, ctx) for m in data['F']]
        form = _matrix_from_json(data['form'], n, ctx) if data['form'] is not None else None
    except InvalidInput as e:
        raise CacheCorrupted(str(e)) from e
    lam = data['lam']
    T = WeightModule(data['weights'], E, F, ctx, form=form, label=f'T({lam})')
    return TiltingModel(lam, T, data['top'], weyl=data['weyl'],
                        peeled={int(k): v for k, v in data['peeled'].items()})


def digest(payload):
    return hashlib.sha256(payload.encode()).hexdigest()


class TiltingCache:
    def __init__(self, path=None):
        self.path = path
        self.memo = {}
        self.conn = None
        if path:
            os.makedirs(path, exist_ok=True)
            self.conn = sql.create_engine(f'sqlite:///{os.path.join(path, CACHE_DB)}').connect()

    @staticmethod
    def key(lam, ctx):
        return f'{ctx.label}/{lam}'

    def _rows(self, key):
        if self.conn is None or not sql.inspect(self.conn).has_table(CACHE_TABLE):
            return pd.DataFrame(columns=['key', 'payload', 'digest'])
        return pd.read_sql(sql.text(f'SELECT * FROM {CACHE_TABLE} WHERE key = :key'), self.conn, params={'key': key})

    def invalidate(self, key):
        bt.logging.warning(f'cache entry {key} is corrupted, invalidating and rebuilding')
        self.memo.pop(key, None)
        if self.conn is not None:
            self.conn.execute(sql.text(f'DELETE FROM {CACHE_TABLE} WHERE key = :key'), {'key': key})
            self.conn.commit()

    def get(self, lam, ctx):
        key = self.key(lam, ctx)
        payload = self.memo.get(key)
        if payload is None:
            rows = self._rows(key)
            if not len(rows):
                return None
            payload, stored = rows['payload'].iat[0], rows['digest'].iat[0]
            if digest(payload) != stored:
                self.invalidate(key)
                return None
        try:
            model = decode_model(json.loads(payload), ctx)
        except (CacheCorrupted, ValueError, KeyError, TypeError) as e:
            bt.logging.debug(f'{key}: {e}')
            self.invalidate(key)
            return None
        self.memo[key] = payload
        bt.logging.trace(f'cache hit {key}')
        return model

    def put(self, model):
        key = self.key(model.lam, model.ctx)
        if key in self.memo or len(self._rows(key)):
            return False
        payload = json.dumps(encode_model(model), sort_keys=True)
        self.memo[key] = payload
        if self.conn is not None:
            pd.DataFrame([[key, model.lam, model.ctx.label, payload, digest(payload)]],
                         columns=['key', 'lam', 'context', 'payload', 'digest']) \
                .to_sql(CACHE_TABLE, self.conn, if_exists='append', index=False)
            self.conn.commit()
        bt.logging.debug(f'cached {key}')
        return True

    def keys(self):
        keys = set(self.memo)
        if self.conn is not None and sql.inspect(self.conn).has_table(CACHE_TABLE):
            keys |= set(pd.read_sql(sql.text(f'SELECT key FROM {CACHE_TABLE}'), self.conn)['key'])
        return sorted(keys)

    def close(self):
        if self.conn is not None:
            self.conn.close()
