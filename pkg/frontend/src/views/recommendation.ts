/**
 * Recommendation view: final badge, per-expert votes, weighted-score bars
 * and the rule trace table with satisfied antecedents highlighted.
 *
 * Every displayed figure is copied verbatim from the service payload; bar
 * widths are the only derived visuals and carry no displayed number.
 */

import { el } from '../dom.js';
import type { ExpertVote, Recommendation } from '../types.js';

export interface RenderOptions {
  /** Mark the result as an uncommitted what-if preview. */
  whatIf?: boolean;
}

function scoreBars(vote: ExpertVote): HTMLElement {
  const max = Math.max(...Object.values(vote.weighted_scores), 0);
  const rows = Object.entries(vote.weighted_scores).map(([course, score]) => {
    const width = max > 0 ? (score / max) * 100 : 0;
    return el('div', { class: 'bar-row', 'data-course': course }, [
      el('span', { class: 'bar-label' }, [course]),
      el('div', { class: 'bar-track' }, [
        el('div', { class: 'bar-fill', style: `width:${width.toFixed(1)}%` }),
      ]),
      el('span', { class: 'bar-value', 'data-value': String(score) }, [String(score)]),
    ]);
  });
  return el('div', { class: 'score-bars' }, rows);
}

function traceTable(vote: ExpertVote): HTMLElement {
  const rows = vote.firing.rules.map((rule) =>
    el('tr', { 'data-rule': rule.rule_id }, [
      el('td', { class: 'rule-id' }, [rule.rule_id]),
      el('td', { class: 'rule-consequent' }, [rule.consequent]),
      el('td', { class: 'rule-score' }, [`${rule.score}/${rule.antecedent_count}`]),
      el(
        'td',
        { class: 'rule-antecedents' },
        rule.antecedents.map((antecedent) =>
          el(
            'span',
            {
              class: `antecedent ${antecedent.satisfied ? 'satisfied' : 'unsatisfied'}`,
              'data-satisfied': String(antecedent.satisfied),
            },
            [antecedent.description],
          ),
        ),
      ),
    ]),
  );
  return el('table', { class: 'trace' }, [
    el('thead', {}, [
      el('tr', {}, [
        el('th', {}, ['Rule']),
        el('th', {}, ['Recommends']),
        el('th', {}, ['Fired']),
        el('th', {}, ['Antecedents']),
      ]),
    ]),
    el('tbody', {}, rows),
  ]);
}

function expertSection(vote: ExpertVote): HTMLElement {
  return el('section', { class: 'expert-vote', 'data-expert': vote.expert_id }, [
    el('h3', {}, [
      `Expert ${vote.expert_id} → `,
      el(
        'span',
        { class: 'vote-badge', 'data-recommended': vote.recommended ?? '' },
        [vote.recommended ?? 'no recommendation'],
      ),
    ]),
    scoreBars(vote),
    traceTable(vote),
  ]);
}

export function renderRecommendation(
  recommendation: Recommendation,
  options: RenderOptions = {},
): HTMLElement {
  const classes = options.whatIf ? 'recommendation whatif' : 'recommendation';
  const header = el('h2', {}, [
    `Recommendation for ${recommendation.candidate_id}: `,
    el(
      'span',
      { class: 'final-badge', 'data-final': recommendation.final ?? '' },
      [recommendation.final ?? 'none'],
    ),
  ]);
  const counts = el(
    'p',
    { class: 'vote-counts' },
    [
      Object.entries(recommendation.vote_counts)
        .map(([course, count]) => `${course}: ${count}`)
        .join('  ') || 'no votes',
    ],
  );
  const children: (Node | string)[] = [];
  if (options.whatIf) {
    children.push(
      el('p', { class: 'whatif-banner', role: 'status' }, [
        'What-if preview — weights overridden, knowledge base unchanged',
      ]),
    );
  }
  children.push(header, counts);
  if (recommendation.tie_break) {
    children.push(el('p', { class: 'tie-break' }, [`Resolved by: ${recommendation.tie_break}`]));
  }
  children.push(...recommendation.votes.map(expertSection));
  return el('section', { class: classes }, children);
}
