import logging

from Edrod.Business.Workspace import Workspace
from Edrod.Detectors.Interface.IDetector import IDetector
from Edrod.Model.ScoreReport import ScoreReport
from Edrod.Neighbors.selection import select_neighbors
from Edrod.Scoring.entropy import edr_scores

logger = logging.getLogger(__name__)

"""Entropy Density Ratio detector: global KDE density plus Md-KNN local entropy."""
class EdrodDetector(IDetector):
    def score(self, workspace: Workspace) -> ScoreReport:
        spec = self.spec
        density = workspace.density(spec.kernel_spec())
        table = select_neighbors(workspace.distances(spec.distance), spec.k, workspace.threads)
        report = edr_scores(density, table)
        logger.info("EDROD scored %d samples (k=%d, h=%g)", table.n, spec.k, spec.bandwidth)
        return ScoreReport(
            method=spec.method.value,
            ranking=report.log_edr,
            log_domain=True,
            params=spec.to_dict(),
            diagnostics={
                "tie_events": table.tie_events,
                "zero_entropy": report.zero_entropy_count,
                "ridge_used": workspace.ridge_used(),
            },
            labels=workspace.data.labels,
        )
