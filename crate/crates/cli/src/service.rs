//! HTTP session service: one game per session, EMPTY's moves posted by the
//! client, NONEMPTY's replies computed by the Galvin 2-tactic.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use bmgl_core::game::BaireClopen;
use bmgl_core::session::{GameSession, LoggedMove, SessionConfig, SessionError};
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;
use tokio::sync::{Mutex, RwLock};

#[derive(Debug, Error)]
pub enum ServiceError {
    #[error("unknown session `{0}`")]
    UnknownSession(String),
    #[error(transparent)]
    Session(#[from] SessionError),
    #[error("bad request: {0}")]
    BadRequest(String),
    #[error("persistence: {0}")]
    Persist(String),
}

impl IntoResponse for ServiceError {
    fn into_response(self) -> Response {
        let (status, body) = match &self {
            ServiceError::UnknownSession(id) => (
                StatusCode::NOT_FOUND,
                json!({"error": "unknown_session", "reason": format!("no session `{id}`")}),
            ),
            ServiceError::Session(SessionError::IllegalMove { round, reason }) => (
                StatusCode::BAD_REQUEST,
                json!({"error": "illegal_move", "reason": reason, "round": round}),
            ),
            ServiceError::Session(SessionError::Finished) => (
                StatusCode::BAD_REQUEST,
                json!({"error": "finished", "reason": self.to_string()}),
            ),
            ServiceError::Session(e) => (
                StatusCode::BAD_REQUEST,
                json!({"error": "bad_config", "reason": e.to_string()}),
            ),
            ServiceError::BadRequest(m) => (
                StatusCode::BAD_REQUEST,
                json!({"error": "bad_request", "reason": m}),
            ),
            ServiceError::Persist(m) => (
                StatusCode::INTERNAL_SERVER_ERROR,
                json!({"error": "persistence", "reason": m}),
            ),
        };
        (status, Json(body)).into_response()
    }
}

/// Shared state: the live sessions and, optionally, their on-disk logs.
#[derive(Default)]
pub struct Sessions {
    next: AtomicU64,
    live: RwLock<HashMap<String, Arc<Mutex<GameSession>>>>,
    persist: Option<PathBuf>,
}

impl Sessions {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Sessions backed by append-only `<id>.jsonl` logs in `dir`: a config
    /// line, then one line per EMPTY move. Existing logs are replayed.
    pub fn persistent(dir: impl Into<PathBuf>) -> Result<Self, ServiceError> {
        let dir = dir.into();
        let perr = |e: std::io::Error| ServiceError::Persist(e.to_string());
        fs::create_dir_all(&dir).map_err(perr)?;
        let mut live = HashMap::new();
        let mut max_id = 0;
        for entry in fs::read_dir(&dir).map_err(perr)? {
            let path = entry.map_err(perr)?.path();
            if path.extension().and_then(|e| e.to_str()) != Some("jsonl") {
                continue;
            }
            let Some(id) = path.file_stem().and_then(|s| s.to_str()).map(String::from) else {
                continue;
            };
            let session = load_log(&id, File::open(&path).map_err(perr)?)?;
            if let Some(n) = id.strip_prefix('s').and_then(|n| n.parse::<u64>().ok()) {
                max_id = max_id.max(n);
            }
            live.insert(id, Arc::new(Mutex::new(session)));
        }
        Ok(Sessions {
            next: AtomicU64::new(max_id),
            live: RwLock::new(live),
            persist: Some(dir),
        })
    }

    async fn get(&self, id: &str) -> Result<Arc<Mutex<GameSession>>, ServiceError> {
        self.live
            .read()
            .await
            .get(id)
            .cloned()
            .ok_or_else(|| ServiceError::UnknownSession(id.into()))
    }

    fn append(&self, id: &str, line: &impl serde::Serialize) -> Result<(), ServiceError> {
        let Some(dir) = &self.persist else {
            return Ok(());
        };
        let perr = |e: std::io::Error| ServiceError::Persist(e.to_string());
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(dir.join(format!("{id}.jsonl")))
            .map_err(perr)?;
        let mut s = serde_json::to_string(line).expect("log lines serialize");
        s.push('\n');
        f.write_all(s.as_bytes()).map_err(perr)
    }
}

fn load_log(id: &str, file: File) -> Result<GameSession, ServiceError> {
    let bad = |m: String| ServiceError::Persist(format!("{id}.jsonl: {m}"));
    let mut lines = BufReader::new(file).lines();
    let config: SessionConfig = match lines.next() {
        Some(l) => serde_json::from_str(&l.map_err(|e| bad(e.to_string()))?)
            .map_err(|e| bad(e.to_string()))?,
        None => return Err(bad("empty log".into())),
    };
    let moves = lines
        .map(|l| {
            let l = l.map_err(|e| bad(e.to_string()))?;
            serde_json::from_str::<LoggedMove>(&l).map_err(|e| bad(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    GameSession::replay(id, config, &moves).map_err(|e| bad(e.to_string()))
}

/// `u` is either a sequence literal (`"[1,0,7]"`, `"1 0 7"`) or a JSON array.
#[derive(Deserialize)]
pub struct MoveRequest {
    #[serde(default)]
    pub u: Option<Value>,
    #[serde(default)]
    pub auto: bool,
}

fn read_clopen(v: Value) -> Result<BaireClopen, ServiceError> {
    match v {
        Value::String(s) => s
            .parse()
            .map_err(|e: bmgl_core::game::GameError| ServiceError::BadRequest(e.to_string())),
        other => serde_json::from_value(other).map_err(|e| ServiceError::BadRequest(e.to_string())),
    }
}

async fn create(
    State(st): State<Arc<Sessions>>,
    body: Option<Json<SessionConfig>>,
) -> Result<Response, ServiceError> {
    let config = body.map(|Json(c)| c).unwrap_or_default();
    config.validate()?;
    let id = format!("s{}", st.next.fetch_add(1, Ordering::SeqCst) + 1);
    let session = GameSession::new(id.clone(), config.clone())?;
    st.append(&id, &config)?;
    let state = session.state();
    st.live
        .write()
        .await
        .insert(id.clone(), Arc::new(Mutex::new(session)));
    Ok((StatusCode::CREATED, Json(json!({"id": id, "state": state}))).into_response())
}

async fn state(
    State(st): State<Arc<Sessions>>,
    Path(id): Path<String>,
) -> Result<Response, ServiceError> {
    let s = st.get(&id).await?;
    let s = s.lock().await;
    Ok(Json(s.state()).into_response())
}

async fn transcript(
    State(st): State<Arc<Sessions>>,
    Path(id): Path<String>,
) -> Result<Response, ServiceError> {
    let s = st.get(&id).await?;
    let s = s.lock().await;
    Ok(Json(s.transcript_view()).into_response())
}

async fn make_move(
    State(st): State<Arc<Sessions>>,
    Path(id): Path<String>,
    Json(req): Json<MoveRequest>,
) -> Result<Response, ServiceError> {
    let s = st.get(&id).await?;
    let mut s = s.lock().await;
    let reply = match (req.u, req.auto) {
        (Some(_), true) => {
            return Err(ServiceError::BadRequest(
                "give either `u` or `auto`, not both".into(),
            ))
        }
        (Some(u), false) => s.submit(read_clopen(u)?)?,
        (None, true) => s.auto_move()?,
        (None, false) => return Err(ServiceError::BadRequest("missing `u`".into())),
    };
    let logged = s.log().last().expect("a move was just made").clone();
    st.append(&id, &logged)?;
    Ok(Json(reply).into_response())
}

pub fn router(sessions: Arc<Sessions>) -> Router {
    Router::new()
        .route("/session", post(create))
        .route("/session/{id}", get(state))
        .route("/session/{id}/move", post(make_move))
        .route("/session/{id}/transcript", get(transcript))
        .with_state(sessions)
}

pub async fn serve(bind: &str, sessions: Sessions) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(bind).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(Arc::new(sessions))).await
}
