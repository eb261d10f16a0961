# tests/conftest.py
import io

import pytest

from app.api.repositories.tables_repositories import ExceptionalTableRepository
from app.api.services.blocks_services import BlockService
from app.api.services.exceptional_services import ExceptionalService
from app.api.services.oracles_services import OracleService
from app.api.services.unipotent_services import UnipotentService

SAMPLE_TABLE = """\
# sample table
SERIES G2 : 1, G2[1], G2[-1], G2[θ], G2[θ²]
SERIES F4 : 1, B2, F4[-1], F4[i], F4[-i], F4''[1], F4[θ]
F4 2 : {1, B2, F4[-1], F4[i], F4''[1]}   # merged series
G2 3 : {1, G2[θ]} ; {G2[1]}
"""


@pytest.fixture
def table_repo() -> ExceptionalTableRepository:
    return ExceptionalTableRepository()


@pytest.fixture
def sample_table(table_repo):
    return table_repo.load_table(io.StringIO(SAMPLE_TABLE))


@pytest.fixture
def exceptional_service(table_repo) -> ExceptionalService:
    return ExceptionalService(table_repo)


@pytest.fixture
def unipotent_service(exceptional_service) -> UnipotentService:
    return UnipotentService(exceptional_service)


@pytest.fixture
def block_service(unipotent_service) -> BlockService:
    return BlockService(unipotent_service)


@pytest.fixture
def oracle_service(unipotent_service, block_service) -> OracleService:
    return OracleService(unipotent_service, block_service)
