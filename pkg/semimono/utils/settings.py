import os

from pydantic import BaseModel, Field

THREADS_ENV_VAR = 'SEMIMONO_THREADS'


class RuntimeSettings(BaseModel):
    threads: int = Field(default=0, ge=0, description='Worker processes for sweeps; 0 means one per CPU')

    @classmethod
    def from_env(cls) -> 'RuntimeSettings':
        raw = os.environ.get(THREADS_ENV_VAR, '').strip()
        return cls(threads=raw or 0)

    @property
    def workers(self) -> int:
        return self.threads or os.cpu_count() or 1
